#ifndef HEIGHTLAB_TRIANGULATION_HPP
#define HEIGHTLAB_TRIANGULATION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "heightlab/common.hpp"

namespace heightlab {

/// Oriented triangular face. `cycle` lists the three directed arcs
/// a->b, b->c, c->a; it is rotated so the smallest vertex comes first,
/// which keeps face lists stable for hashing and JSON.
struct Face {
    std::array<Vertex, 3> cycle;

    bool contains(Vertex v) const {
        return cycle[0] == v || cycle[1] == v || cycle[2] == v;
    }
    /// Third vertex besides a and b, or -1.
    Vertex apex(Vertex a, Vertex b) const {
        for (Vertex v : cycle)
            if (v != a && v != b) return v;
        return -1;
    }
    std::array<Vertex, 3> sorted() const;
    bool operator==(const Face& o) const { return cycle == o.cycle; }
};

/// A maximal planar graph with a fixed combinatorial embedding.
/// Every face (including whichever is later declared outer) is a directed
/// triangle, and traversing all faces covers each directed arc exactly once.
/// Immutable after construction; safe to share across threads.
class Triangulation {
public:
    int n = 0;
    std::vector<Face> faces;
    /// Cyclic neighbor order per vertex, derived from the face list.
    std::vector<std::vector<Vertex>> rotation;
    std::optional<int> outer_face;

    int edge_count() const { return int(edge_set_.size()); }

    bool has_edge(Vertex a, Vertex b) const {
        return edge_set_.count(pack_edge(a, b)) > 0;
    }
    const std::vector<Vertex>& neighbors(Vertex v) const { return rotation[v]; }

    /// Index of the face whose directed cycle contains the arc from->to.
    int face_of_arc(Vertex from, Vertex to) const {
        auto it = arc_face_.find(pack_arc(from, to));
        return it == arc_face_.end() ? -1 : it->second;
    }
    /// Index of the face {a,b,c} with the given apex across edge (a,b), or -1.
    int face_with(Vertex a, Vertex b, Vertex apex) const {
        int f1 = face_of_arc(a, b), f2 = face_of_arc(b, a);
        if (f1 >= 0 && faces[f1].contains(apex)) return f1;
        if (f2 >= 0 && faces[f2].contains(apex)) return f2;
        return -1;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Faces incident to v (as indices).
    std::vector<int> faces_at(Vertex v) const;

    /// Stable content hash of the face list.
    std::uint64_t content_hash() const;

    friend Triangulation build_triangulation(const std::vector<std::array<Vertex, 3>>&,
                                             std::optional<int>);

private:
    std::unordered_set<std::uint64_t> edge_set_;
    std::unordered_map<std::uint64_t, int> arc_face_;
};

/// Build and fully validate a triangulation from a face list. Faces may be
/// given with arbitrary per-triple orientation; a consistent global
/// orientation is derived (the first face keeps its written order).
/// Throws BuildError with code NonTriangular, NonPlanar, NotSimple or
/// Disconnected on the first violated invariant.
Triangulation build_triangulation(const std::vector<std::array<Vertex, 3>>& face_list,
                                  std::optional<int> outer_face = std::nullopt);

/// Hop distance between a and b in T minus `forbidden`; nullopt if
/// unreachable. Throws BuildError("InvalidVertex") if a or b is out of range
/// or forbidden.
std::optional<int> distance(const Triangulation& T, Vertex a, Vertex b,
                            const std::set<Vertex>& forbidden = {});

/// `count` stacked triangulations on n vertices: start from K4 and repeatedly
/// insert a new vertex into a uniformly random face. Deterministic per seed.
std::vector<Triangulation> enumerate_stacked_triangulations(int n, std::uint64_t seed,
                                                            int count);

/// K4 with its canonical face list.
Triangulation make_k4();
/// The degenerate two-face triangle (n = 3).
Triangulation make_k3();

} // namespace heightlab

#endif
