#include "heightlab/peeling.hpp"

#include <algorithm>

namespace heightlab {

namespace {

// One peeling run. The unbounded region is tracked as the set of original
// faces merged into it: deleting a vertex merges every face incident to it,
// and the next layer is every surviving vertex incident to the region. This
// peels all boundary cycles of all remaining components simultaneously,
// which settles the disconnected case.
std::vector<std::vector<Vertex>> peel_layers(const Triangulation& T, int outer_face) {
    int F = int(T.faces.size());
    std::vector<char> in_region(F, 0), removed(T.n, 0);
    in_region[outer_face] = 1;
    int remaining = T.n;
    std::vector<std::vector<Vertex>> layers;
    while (remaining > 0) {
        std::vector<Vertex> layer;
        for (Vertex v = 0; v < T.n; ++v) {
            if (removed[v]) continue;
            for (int fi = 0; fi < F; ++fi)
                if (in_region[fi] && T.faces[fi].contains(v)) {
                    layer.push_back(v);
                    break;
                }
        }
        if (layer.empty()) break; // cannot happen on valid embeddings
        for (Vertex v : layer) {
            removed[v] = 1;
            --remaining;
            for (int fi = 0; fi < F; ++fi)
                if (T.faces[fi].contains(v)) in_region[fi] = 1;
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

} // namespace

int outerplanarity_at(const Triangulation& T, int outer_face, PeelingCertificate* cert) {
    auto layers = peel_layers(T, outer_face);
    if (cert) {
        cert->outer_face = outer_face;
        cert->layers = layers;
    }
    return int(layers.size());
}

OuterplanarityResult outerplanarity(const Triangulation& T) {
    OuterplanarityResult best;
    best.value = T.n + 1;
    for (int fi = 0; fi < int(T.faces.size()); ++fi) {
        PeelingCertificate c;
        int v = outerplanarity_at(T, fi, &c);
        if (v < best.value) {
            best.value = v;
            best.cert = std::move(c);
        }
    }
    return best;
}

Check validate_peeling(const Triangulation& T, const PeelingCertificate& cert) {
    if (cert.outer_face < 0 || cert.outer_face >= int(T.faces.size()))
        return violation("peeling.outer_face", "face index out of range");
    auto layers = peel_layers(T, cert.outer_face);
    if (layers.size() != cert.layers.size())
        return violation("peeling.layers", "layer count mismatch", int(layers.size()));
    for (std::size_t i = 0; i < layers.size(); ++i) {
        auto a = layers[i];
        auto b = cert.layers[i];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return violation("peeling.layers", "layer content mismatch", int(i));
    }
    return std::nullopt;
}

int grid_outerplanarity_check(int h, int w) {
    // Same region-merge process on the embedded grid: bounded faces are the
    // unit cells, and the unbounded region starts outside the rectangle.
    std::vector<char> alive(std::size_t(h) * w, 1);
    std::vector<char> cell_open((h > 1 && w > 1) ? std::size_t(h - 1) * (w - 1) : 0, 0);
    auto vid = [&](int r, int c) { return std::size_t(r) * w + c; };
    auto cid = [&](int r, int c) { return std::size_t(r) * (w - 1) + c; };
    int remaining = h * w;
    int steps = 0;
    while (remaining > 0) {
        std::vector<std::pair<int, int>> layer;
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c) {
                if (!alive[vid(r, c)]) continue;
                bool boundary = (r == 0 || c == 0 || r == h - 1 || c == w - 1);
                if (!boundary)
                    for (int dr = -1; dr <= 0 && !boundary; ++dr)
                        for (int dc = -1; dc <= 0 && !boundary; ++dc)
                            if (cell_open[cid(r + dr, c + dc)]) boundary = true;
                if (boundary) layer.emplace_back(r, c);
            }
        for (auto [r, c] : layer) {
            alive[vid(r, c)] = 0;
            --remaining;
            for (int dr = -1; dr <= 0; ++dr)
                for (int dc = -1; dc <= 0; ++dc) {
                    int cr = r + dr, cc = c + dc;
                    if (cr >= 0 && cc >= 0 && cr < h - 1 && cc < w - 1)
                        cell_open[cid(cr, cc)] = 1;
                }
        }
        ++steps;
    }
    return steps;
}

} // namespace heightlab
