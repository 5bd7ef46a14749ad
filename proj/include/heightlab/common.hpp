#ifndef HEIGHTLAB_COMMON_HPP
#define HEIGHTLAB_COMMON_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace heightlab {

using Vertex = int;

/// Error thrown when an input fails a structural precondition.
/// `code` names the first violated invariant ("NonTriangular", "NotSimple", ...).
class BuildError : public std::runtime_error {
public:
    BuildError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// First violated rule found by a validator. `index` is a move/curve/layer
/// index where applicable, -1 otherwise.
struct Violation {
    std::string rule;
    std::string detail;
    int index = -1;
};

/// nullopt means "valid".
using Check = std::optional<Violation>;

inline Check violation(std::string rule, std::string detail, int index = -1) {
    return Violation{std::move(rule), std::move(detail), index};
}

inline std::uint64_t pack_edge(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}

inline std::uint64_t pack_arc(Vertex from, Vertex to) {
    return (std::uint64_t(std::uint32_t(from)) << 32) | std::uint32_t(to);
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace heightlab

#endif
