#include "heightlab/pathwidth.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace heightlab {

int PathDecomposition::width() const {
    std::size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return int(mx) - 1;
}

namespace {

std::vector<std::vector<Vertex>> adjacency(const Triangulation& T) {
    std::vector<std::vector<Vertex>> adj(T.n);
    for (Vertex v = 0; v < T.n; ++v) adj[v] = T.neighbors(v);
    return adj;
}

} // namespace

PathwidthResult pathwidth_exact_graph(const std::vector<std::vector<Vertex>>& adj,
                                      int cap) {
    int n = int(adj.size());
    if (n > cap || n > 30)
        throw BuildError("TooLarge", "n=" + std::to_string(n) +
                                         " exceeds pathwidth cap " + std::to_string(cap));
    std::vector<std::uint32_t> nbr(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : adj[v]) nbr[v] |= (1u << w);

    // f[S] = min over orderings of S (as a prefix) of the max boundary size,
    // where boundary(S) = vertices of S adjacent to the outside. This is the
    // vertex separation number, which equals pathwidth.
    std::size_t total = std::size_t(1) << n;
    std::vector<std::uint8_t> f(total, 0xff);
    f[0] = 0;
    auto boundary_size = [&](std::uint32_t S) {
        int b = 0;
        std::uint32_t rest = S;
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            if (nbr[v] & ~S) ++b;
        }
        return b;
    };
    for (std::uint32_t S = 1; S < total; ++S) {
        int bd = boundary_size(S);
        std::uint8_t best = 0xff;
        std::uint32_t rest = S;
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            std::uint8_t sub = f[S & ~(1u << v)];
            std::uint8_t cand = std::max<std::uint8_t>(sub, std::uint8_t(bd));
            best = std::min(best, cand);
        }
        f[S] = best;
    }

    // Recover an optimal elimination order by walking back from the full set.
    std::uint32_t full = std::uint32_t(total - 1);
    int value = f[full];
    std::vector<Vertex> order(n);
    std::uint32_t S = full;
    for (int i = n - 1; i >= 0; --i) {
        int bd = boundary_size(S);
        std::uint32_t rest = S;
        bool found = false;
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            if (std::max<int>(f[S & ~(1u << v)], bd) == f[S]) {
                order[i] = v;
                S &= ~(1u << v);
                found = true;
                break;
            }
        }
        if (!found) throw BuildError("Internal", "pathwidth DP reconstruction failed");
    }

    // Bags: B_i = boundary(prefix before i) + v_i.
    PathwidthResult res;
    res.value = value;
    std::uint32_t prefix = 0;
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> bag;
        std::uint32_t rest = prefix;
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            if (nbr[v] & ~prefix) bag.push_back(v);
        }
        bag.push_back(order[i]);
        std::sort(bag.begin(), bag.end());
        res.cert.bags.push_back(std::move(bag));
        prefix |= (1u << order[i]);
    }
    return res;
}

PathwidthResult pathwidth_exact(const Triangulation& T, int cap) {
    return pathwidth_exact_graph(adjacency(T), cap);
}

Check validate_path_decomposition(const std::vector<std::vector<Vertex>>& adj,
                                  const PathDecomposition& pd) {
    int n = int(adj.size());
    int L = int(pd.bags.size());
    std::vector<int> first(n, -1), last(n, -1);
    for (int i = 0; i < L; ++i)
        for (Vertex v : pd.bags[i]) {
            if (v < 0 || v >= n) return violation("pd.vertex", "vertex out of range", i);
            if (first[v] < 0) first[v] = i;
            last[v] = i;
        }
    for (Vertex v = 0; v < n; ++v) {
        if (first[v] < 0) return violation("pd.coverage", "vertex missing from all bags");
        for (int i = first[v]; i <= last[v]; ++i) {
            if (std::find(pd.bags[i].begin(), pd.bags[i].end(), v) == pd.bags[i].end())
                return violation("pd.consecutive", "vertex occurrences not consecutive", i);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : adj[v]) {
            if (w < v) continue;
            bool ok = false;
            for (int i = std::max(first[v], first[w]);
                 i <= std::min(last[v], last[w]) && !ok; ++i) {
                const auto& b = pd.bags[i];
                ok = std::find(b.begin(), b.end(), v) != b.end() &&
                     std::find(b.begin(), b.end(), w) != b.end();
            }
            if (!ok) return violation("pd.edge", "edge not contained in any bag");
        }
    return std::nullopt;
}

Check validate_path_decomposition(const Triangulation& T, const PathDecomposition& pd) {
    return validate_path_decomposition(adjacency(T), pd);
}

} // namespace heightlab
