#include "heightlab/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace heightlab {

std::array<Vertex, 3> Face::sorted() const {
    std::array<Vertex, 3> s = cycle;
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<std::pair<Vertex, Vertex>> Triangulation::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_set_.size());
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : rotation[v])
            if (v < w) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Triangulation::faces_at(Vertex v) const {
    std::vector<int> out;
    for (int i = 0; i < int(faces.size()); ++i)
        if (faces[i].contains(v)) out.push_back(i);
    return out;
}

std::uint64_t Triangulation::content_hash() const {
    std::uint64_t h = std::uint64_t(n);
    for (const Face& f : faces)
        for (Vertex v : f.cycle) h = hash_mix(h, std::uint64_t(v));
    return h;
}

namespace {

std::array<Vertex, 3> rotate_min_first(std::array<Vertex, 3> c) {
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (c[i] < c[k]) k = i;
    return {c[k], c[(k + 1) % 3], c[(k + 2) % 3]};
}

} // namespace

Triangulation build_triangulation(const std::vector<std::array<Vertex, 3>>& face_list,
                                  std::optional<int> outer_face) {
    if (face_list.empty()) throw BuildError("NonTriangular", "empty face list");

    Vertex maxv = 0;
    for (const auto& f : face_list)
        for (Vertex v : f) {
            if (v < 0) throw BuildError("NotSimple", "negative vertex id");
            maxv = std::max(maxv, v);
        }
    int n = maxv + 1;
    for (const auto& f : face_list)
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
            throw BuildError("NotSimple", "face with repeated vertex");
    if (n < 3) throw BuildError("NonTriangular", "fewer than 3 vertices");

    // Each undirected edge must be shared by exactly two face slots.
    std::map<std::uint64_t, std::vector<int>> edge_faces;
    for (int i = 0; i < int(face_list.size()); ++i) {
        const auto& f = face_list[i];
        for (int j = 0; j < 3; ++j)
            edge_faces[pack_edge(f[j], f[(j + 1) % 3])].push_back(i);
    }
    for (const auto& [e, fs] : edge_faces) {
        (void)e;
        if (fs.size() != 2)
            throw BuildError("NonTriangular",
                             "edge on " + std::to_string(fs.size()) +
                                 " face sides (expected 2); the face complex has a hole or fold");
    }

    // Orient faces consistently: adjacent faces must traverse their shared
    // edge in opposite directions. BFS over the dual; face 0 keeps its
    // written order.
    int F = int(face_list.size());
    std::vector<int> flip(F, -1); // 0 keep, 1 reverse
    flip[0] = 0;
    std::deque<int> bfs{0};
    auto arc_in_slot = [&](int fi, Vertex a, Vertex b, bool flipped) {
        const auto& f = face_list[fi];
        for (int j = 0; j < 3; ++j) {
            Vertex x = f[j], y = f[(j + 1) % 3];
            if (flipped) std::swap(x, y);
            if (x == a && y == b) return true;
        }
        return false;
    };
    while (!bfs.empty()) {
        int fi = bfs.front();
        bfs.pop_front();
        const auto& f = face_list[fi];
        for (int j = 0; j < 3; ++j) {
            Vertex a = f[j], b = f[(j + 1) % 3];
            const auto& pair = edge_faces[pack_edge(a, b)];
            int other = pair[0] == fi ? pair[1] : pair[0];
            // Arc direction of this edge in fi under current flip.
            Vertex x = a, y = b;
            if (flip[fi]) std::swap(x, y);
            // `other` must contain the reverse arc y->x.
            int need = arc_in_slot(other, y, x, false) ? 0
                       : arc_in_slot(other, y, x, true) ? 1
                                                        : -1;
            if (need < 0) throw BuildError("NonPlanar", "face complex not orientable");
            if (flip[other] < 0) {
                flip[other] = need;
                bfs.push_back(other);
            } else if (flip[other] != need) {
                throw BuildError("NonPlanar", "inconsistent face orientations");
            }
        }
    }
    for (int i = 0; i < F; ++i)
        if (flip[i] < 0) throw BuildError("Disconnected", "face complex not connected");

    Triangulation T;
    T.n = n;
    T.faces.reserve(F);
    for (int i = 0; i < F; ++i) {
        std::array<Vertex, 3> c = face_list[i];
        if (flip[i]) std::swap(c[1], c[2]);
        T.faces.push_back(Face{rotate_min_first(c)});
    }

    // Directed arc -> face map; every arc exactly once.
    for (int i = 0; i < F; ++i) {
        const auto& c = T.faces[i].cycle;
        for (int j = 0; j < 3; ++j) {
            auto key = pack_arc(c[j], c[(j + 1) % 3]);
            if (!T.arc_face_.emplace(key, i).second)
                throw BuildError("NonPlanar", "directed arc covered twice");
        }
    }

    // Rotation system: at u, the successor of neighbor b is the apex of the
    // face containing arc u->b. Every vertex's neighbors must close into a
    // single cycle.
    T.rotation.assign(n, {});
    std::map<Vertex, std::vector<Vertex>> out_nbrs;
    for (const Face& f : T.faces)
        for (int j = 0; j < 3; ++j) out_nbrs[f.cycle[j]].push_back(f.cycle[(j + 1) % 3]);
    for (Vertex u = 0; u < n; ++u) {
        auto it = out_nbrs.find(u);
        if (it == out_nbrs.end()) throw BuildError("Disconnected", "isolated vertex id");
        std::vector<Vertex> nbrs = it->second;
        std::sort(nbrs.begin(), nbrs.end());
        Vertex start = nbrs[0];
        std::vector<Vertex> cyc{start};
        std::unordered_set<Vertex> seen{start};
        Vertex cur = start;
        while (true) {
            int fi = T.face_of_arc(u, cur);
            if (fi < 0) throw BuildError("NonPlanar", "missing arc in face map");
            Vertex nxt = T.faces[fi].apex(u, cur);
            if (nxt == start) break;
            if (seen.count(nxt))
                throw BuildError("NonPlanar", "vertex link is not a single cycle");
            seen.insert(nxt);
            cyc.push_back(nxt);
            cur = nxt;
        }
        std::unordered_set<Vertex> uniq(nbrs.begin(), nbrs.end());
        if (cyc.size() != uniq.size())
            throw BuildError("NonPlanar", "vertex link does not cover all neighbors");
        if (uniq.count(u)) throw BuildError("NotSimple", "loop edge");
        T.rotation[u] = cyc;
    }

    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : T.rotation[u]) T.edge_set_.insert(pack_edge(u, w));

    int m = T.edge_count();
    if (n == 3) {
        if (m != 3 || F != 2) throw BuildError("NonTriangular", "bad degenerate triangle");
    } else {
        if (m != 3 * n - 6)
            throw BuildError("NonTriangular", "edge count " + std::to_string(m) +
                                                  " != 3n-6");
        if (n - m + F != 2) throw BuildError("NonPlanar", "Euler characteristic != 2");
    }

    // Connectivity over vertices.
    {
        std::vector<char> vis(n, 0);
        std::deque<Vertex> q{0};
        vis[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            for (Vertex w : T.rotation[v])
                if (!vis[w]) {
                    vis[w] = 1;
                    ++cnt;
                    q.push_back(w);
                }
        }
        if (cnt != n) throw BuildError("Disconnected", "graph not connected");
    }

    // 3-connectivity, brute force: remove each vertex pair, recheck
    // connectivity of the rest. Fixture sizes keep this cheap.
    if (n >= 4) {
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) {
                std::vector<char> vis(n, 0);
                vis[a] = vis[b] = 1;
                Vertex s = 0;
                while (s == a || s == b) ++s;
                std::deque<Vertex> q{s};
                vis[s] = 1;
                int cnt = 1;
                while (!q.empty()) {
                    Vertex v = q.front();
                    q.pop_front();
                    for (Vertex w : T.rotation[v])
                        if (!vis[w]) {
                            vis[w] = 1;
                            ++cnt;
                            q.push_back(w);
                        }
                }
                if (cnt != n - 2)
                    throw BuildError("NonPlanar", "triangulation is not 3-connected");
            }
    }

    if (outer_face) {
        if (*outer_face < 0 || *outer_face >= F)
            throw BuildError("NonTriangular", "outer_face index out of range");
        T.outer_face = outer_face;
    }
    return T;
}

std::optional<int> distance(const Triangulation& T, Vertex a, Vertex b,
                            const std::set<Vertex>& forbidden) {
    auto bad = [&](Vertex v) { return v < 0 || v >= T.n || forbidden.count(v); };
    if (bad(a) || bad(b)) throw BuildError("InvalidVertex", "endpoint invalid or forbidden");
    if (a == b) return 0;
    std::vector<int> dist(T.n, -1);
    dist[a] = 0;
    std::deque<Vertex> q{a};
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (Vertex w : T.neighbors(v)) {
            if (forbidden.count(w) || dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            if (w == b) return dist[w];
            q.push_back(w);
        }
    }
    return std::nullopt;
}

Triangulation make_k4() {
    return build_triangulation({{{0, 1, 2}}, {{0, 3, 1}}, {{0, 2, 3}}, {{1, 3, 2}}});
}

Triangulation make_k3() {
    return build_triangulation({{{0, 1, 2}}, {{0, 2, 1}}});
}

std::vector<Triangulation> enumerate_stacked_triangulations(int n, std::uint64_t seed,
                                                            int count) {
    if (n < 4) throw BuildError("InvalidVertex", "stacked triangulations need n >= 4");
    std::mt19937_64 rng(seed);
    std::vector<Triangulation> out;
    out.reserve(count);
    for (int c = 0; c < count; ++c) {
        std::vector<std::array<Vertex, 3>> faces = {
            {{0, 1, 2}}, {{0, 3, 1}}, {{0, 2, 3}}, {{1, 3, 2}}};
        for (Vertex v = 4; v < n; ++v) {
            std::size_t pick = std::size_t(rng() % faces.size());
            auto f = faces[pick];
            faces.erase(faces.begin() + pick);
            faces.push_back({{f[0], f[1], v}});
            faces.push_back({{f[1], f[2], v}});
            faces.push_back({{f[2], f[0], v}});
        }
        out.push_back(build_triangulation(faces));
    }
    return out;
}

} // namespace heightlab
