#include "heightlab/gridrep.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace heightlab {

std::vector<Vertex> GridRep::column(int c) const {
    std::vector<Vertex> col(height);
    for (int r = 0; r < height; ++r) col[r] = labels[r][c];
    return col;
}

std::vector<Vertex> GridRep::column_dedup(int c) const {
    std::vector<Vertex> out;
    for (int r = 0; r < height; ++r)
        if (out.empty() || out.back() != labels[r][c]) out.push_back(labels[r][c]);
    return out;
}

GridRep make_gridrep(const std::vector<std::vector<Vertex>>& labels) {
    GridRep R;
    R.height = int(labels.size());
    R.width = R.height ? int(labels[0].size()) : 0;
    R.labels = labels;
    return R;
}

Check validate_gridrep_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                             const GridRep& R, bool require_simple, bool exact) {
    if (R.height <= 0 || R.width <= 0)
        return violation("gridrep.shape", "empty grid");
    if (int(R.labels.size()) != R.height)
        return violation("gridrep.shape", "row count mismatch");
    for (int r = 0; r < R.height; ++r) {
        if (int(R.labels[r].size()) != R.width)
            return violation("gridrep.shape", "ragged row", r);
        for (int c = 0; c < R.width; ++c)
            if (R.labels[r][c] < 0 || R.labels[r][c] >= n)
                return violation("gridrep.shape",
                                 "label out of range at (" + std::to_string(r) + "," +
                                     std::to_string(c) + ")");
    }

    // (1) every vertex appears.
    std::vector<char> seen(n, 0);
    for (int r = 0; r < R.height; ++r)
        for (int c = 0; c < R.width; ++c) seen[R.labels[r][c]] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (!seen[v])
            return violation("gridrep.cond1", "vertex " + std::to_string(v) + " has no cell");

    // (2) label classes connected in the grid.
    {
        std::vector<int> comp(std::size_t(R.height) * R.width, -1);
        std::vector<int> comps_of(n, 0);
        auto id = [&](int r, int c) { return std::size_t(r) * R.width + c; };
        for (int r = 0; r < R.height; ++r)
            for (int c = 0; c < R.width; ++c) {
                if (comp[id(r, c)] >= 0) continue;
                Vertex v = R.labels[r][c];
                if (++comps_of[v] > 1)
                    return violation("gridrep.cond2",
                                     "cells of vertex " + std::to_string(v) +
                                         " are disconnected (second component at (" +
                                         std::to_string(r) + "," + std::to_string(c) + "))");
                std::deque<std::pair<int, int>> q{{r, c}};
                comp[id(r, c)] = v;
                while (!q.empty()) {
                    auto [cr, cc] = q.front();
                    q.pop_front();
                    const int dr[4] = {0, 0, 1, -1}, dc[4] = {1, -1, 0, 0};
                    for (int d = 0; d < 4; ++d) {
                        int nr = cr + dr[d], nc = cc + dc[d];
                        if (!R.in_range(nr, nc) || comp[id(nr, nc)] >= 0) continue;
                        if (R.labels[nr][nc] != v) continue;
                        comp[id(nr, nc)] = v;
                        q.push_back({nr, nc});
                    }
                }
            }
    }

    // (3) required edges realized; optional exactness for the converse.
    std::set<std::uint64_t> realized;
    for (int r = 0; r < R.height; ++r)
        for (int c = 0; c < R.width; ++c) {
            Vertex v = R.labels[r][c];
            for (auto [nr, nc] : {std::pair{r, c + 1}, std::pair{r + 1, c}}) {
                if (!R.in_range(nr, nc)) continue;
                Vertex w = R.labels[nr][nc];
                if (v != w) realized.insert(pack_edge(v, w));
            }
        }
    std::set<std::uint64_t> required;
    for (auto [a, b] : edges) required.insert(pack_edge(a, b));
    for (auto e : required)
        if (!realized.count(e)) {
            Vertex a = Vertex(e >> 32), b = Vertex(e & 0xffffffff);
            return violation("gridrep.cond3", "edge (" + std::to_string(a) + "," +
                                                  std::to_string(b) + ") not realized");
        }
    if (exact)
        for (auto e : realized)
            if (!required.count(e)) {
                Vertex a = Vertex(e >> 32), b = Vertex(e & 0xffffffff);
                return violation("gridrep.exactness",
                                 "grid edge joins non-adjacent vertices (" +
                                     std::to_string(a) + "," + std::to_string(b) + ")");
            }

    if (require_simple) {
        for (int c = 0; c < R.width; ++c) {
            std::vector<int> last(n, -2);
            for (int r = 0; r < R.height; ++r) {
                Vertex v = R.labels[r][c];
                if (last[v] != -2 && last[v] != r - 1)
                    return violation("gridrep.simple",
                                     "vertex " + std::to_string(v) +
                                         " is not contiguous in column " + std::to_string(c) +
                                         " (rows " + std::to_string(last[v]) + " and " +
                                         std::to_string(r) + ")",
                                     c);
                last[v] = r;
            }
        }
    }
    return std::nullopt;
}

Check validate_gridrep(const Triangulation& T, const GridRep& R, bool require_simple) {
    return validate_gridrep_edges(T.n, T.edges(), R, require_simple, /*exact=*/true);
}

} // namespace heightlab
