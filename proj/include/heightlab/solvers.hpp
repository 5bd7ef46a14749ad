#ifndef HEIGHTLAB_SOLVERS_HPP
#define HEIGHTLAB_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heightlab/gridrep.hpp"
#include "heightlab/homotopy.hpp"
#include "heightlab/pathwidth.hpp"
#include "heightlab/peeling.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab {

struct SolveOptions {
    /// Node expansions allowed per (anchor, height-bound) search.
    std::uint64_t node_budget = 5'000'000;
    /// Parallel fan-out across anchors; 0 reads HEIGHTLAB_THREADS.
    int threads = 0;
};

struct HeightResult {
    int value = -1;
    Homotopy cert;
    /// False when the budget ran out: `value` is then the best verified
    /// upper bound (its certificate still validates).
    bool optimal = true;
    std::uint64_t nodes = 0;
};

/// Minimum simple homotopy height over all outer faces and ordered endpoint
/// pairs. Iterative deepening from the pathwidth/outer-planarity lower
/// bounds; exhausting a bound proves no smaller homotopy exists.
HeightResult shh_exact(const Triangulation& T, const SolveOptions& opts = {});

/// Minimum (non-simple) homotopy height; anchors also range over doubled
/// outer edges and equal endpoint pairs. Face sweeps are restricted to
/// single positive flips, which keeps every reachable sequence a valid
/// homotopy and loses no optima.
HeightResult hh_exact(const Triangulation& T, const SolveOptions& opts = {});

struct OracleResult {
    enum class Status { Feasible, Infeasible, Inconclusive };
    Status status = Status::Inconclusive;
    GridRep rep; // populated when feasible
    int width = 0;
};

/// Column-by-column backtracking search for a grid-major representation of
/// height h and width <= w_cap. Exhaustion certifies infeasibility only when
/// w_cap reaches `width_envelope` (the conversion width bound for the known
/// homotopy height); otherwise the result is inconclusive.
OracleResult gmh_grid_oracle(const Triangulation& T, int h, int w_cap,
                             std::optional<int> width_envelope = std::nullopt);

struct ParameterReport {
    std::uint64_t graph_hash = 0;
    int n = 0;
    int pw = -1, op = -1, shh = -1, hh = -1; // gmh == hh, sgmh == shh
    PathwidthResult pw_result;
    OuterplanarityResult op_result;
    HeightResult shh_result, hh_result;
    bool chain_ok = false;
    bool strict_pw_lt_hh = false, strict_hh_lt_shh = false;
    std::vector<std::string> violations;
};

/// Runs all four solvers, re-validates every certificate and checks
/// pw <= Hh <= sHh and 2*op - 1 <= Hh. Violations indicate bugs, not inputs.
ParameterReport verify_chain(const Triangulation& T, const SolveOptions& opts = {});

/// Conversion width envelope for a homotopy certificate.
int conversion_width_envelope(const Homotopy& H);

} // namespace heightlab

#endif
