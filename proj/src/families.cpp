#include "heightlab/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "heightlab/gridrep.hpp"

namespace heightlab {

// Band wiring: verticals i-i plus a fan from vertex 0 of each ring to the
// whole next ring. The rotationally symmetric (antiprism) wiring yields the
// octahedron family, whose pathwidth is 4; this one keeps it at 3.
Triangulation nested_triangles(int t) {
    if (t < 2) throw BuildError("InvalidVertex", "nested_triangles needs t >= 2");
    std::vector<std::array<Vertex, 3>> faces;
    faces.push_back({0, 1, 2});
    for (int j = 0; j + 1 < t; ++j) {
        Vertex a0 = 3 * j, a1 = a0 + 1, a2 = a0 + 2;
        Vertex b0 = a0 + 3, b1 = a0 + 4, b2 = a0 + 5;
        faces.push_back({a0, a1, b1});
        faces.push_back({a0, b1, b0});
        faces.push_back({a1, a2, b2});
        faces.push_back({a1, b2, b1});
        faces.push_back({a2, a0, b2});
        faces.push_back({a0, b0, b2});
    }
    faces.push_back({3 * (t - 1), 3 * (t - 1) + 1, 3 * (t - 1) + 2});
    return build_triangulation(faces);
}

namespace {

// Faces of an outerplanar graph whose vertices sit on a circle in id order.
// Rotation at p lists neighbors by circular distance from p.
std::vector<std::vector<Vertex>> outerplanar_faces(
    int N, const std::set<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::vector<Vertex>> rot(N);
    for (auto [a, b] : edges) {
        rot[a].push_back(b);
        rot[b].push_back(a);
    }
    for (Vertex p = 0; p < N; ++p)
        std::sort(rot[p].begin(), rot[p].end(), [&](Vertex x, Vertex y) {
            return (x - p + N) % N < (y - p + N) % N;
        });
    auto next_arc = [&](Vertex a, Vertex b) {
        const auto& r = rot[b];
        int i = int(std::find(r.begin(), r.end(), a) - r.begin());
        return std::pair<Vertex, Vertex>{b, r[(i + 1) % r.size()]};
    };
    std::set<std::pair<Vertex, Vertex>> used;
    std::vector<std::vector<Vertex>> faces;
    for (auto [a0, b0] : edges)
        for (auto arc : {std::pair{a0, b0}, std::pair{b0, a0}}) {
            if (used.count(arc)) continue;
            std::vector<Vertex> cyc;
            auto cur = arc;
            while (!used.count(cur)) {
                used.insert(cur);
                cyc.push_back(cur.first);
                cur = next_arc(cur.first, cur.second);
            }
            faces.push_back(cyc);
        }
    // Drop the outer face: the unique cycle walking the whole boundary.
    std::size_t outer = 0;
    for (std::size_t i = 1; i < faces.size(); ++i)
        if (faces[i].size() > faces[outer].size()) outer = i;
    faces.erase(faces.begin() + outer);
    return faces;
}

} // namespace

ApexTree apex_tree(int depth) {
    if (depth < 1) throw BuildError("InvalidVertex", "apex_tree needs depth >= 1");
    int M = (1 << (depth + 1)) - 1; // heap nodes 1..M

    // In-order positions become vertex ids, so the boundary cycle is 0..N-1.
    std::vector<int> heap_of_pos;
    std::vector<int> pos_of_heap(M + 1, -1);
    auto inorder = [&](auto&& self, int h) -> void {
        if (h > M) return;
        self(self, 2 * h);
        pos_of_heap[h] = int(heap_of_pos.size());
        heap_of_pos.push_back(h);
        self(self, 2 * h + 1);
    };
    inorder(inorder, 1);
    int N = M;

    std::set<std::pair<Vertex, Vertex>> edges;
    auto add = [&](Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    for (int h = 2; h <= M; ++h) add(pos_of_heap[h], pos_of_heap[h / 2]);
    for (int i = 0; i < N; ++i) add(i, (i + 1) % N);

    // Fan-triangulate every bounded face from its smallest vertex.
    std::vector<std::array<Vertex, 3>> tri_faces;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& f : outerplanar_faces(N, edges)) {
            if (f.size() == 3) continue;
            Vertex m = *std::min_element(f.begin(), f.end());
            for (Vertex x : f)
                if (x != m && !edges.count({std::min(m, x), std::max(m, x)})) add(m, x);
            grew = true;
        }
    }
    for (const auto& f : outerplanar_faces(N, edges)) {
        if (f.size() != 3) throw BuildError("Internal", "fan triangulation incomplete");
        tri_faces.push_back({f[0], f[1], f[2]});
    }

    Vertex apex = N;
    for (int i = 0; i < N; ++i) tri_faces.push_back({apex, i, (i + 1) % N});
    ApexTree out{build_triangulation(tri_faces), apex, N};
    return out;
}

ApexStrip apex_strip(int n) {
    if (n < 5 || n % 2 == 0)
        throw BuildError("InvalidVertex", "apex_strip needs odd n >= 5");
    int m = n - 1;
    std::vector<std::array<Vertex, 3>> faces;
    for (int i = 0; i + 2 < m; ++i) faces.push_back({i, i + 1, i + 2});
    // Strip boundary: 0,1,3,5,...,m-1,m-2,m-4,...,2,0
    std::vector<Vertex> cyc{0, 1};
    for (int i = 3; i < m; i += 2) cyc.push_back(i);
    for (int i = m - 2; i >= 2; i -= 2) cyc.push_back(i);
    Vertex apex = n - 1;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        faces.push_back({apex, cyc[i], cyc[(i + 1) % cyc.size()]});
    ApexStrip out{build_triangulation(faces), 1, Vertex(m - 1), apex};
    auto d = distance(out.T, out.a, out.b, {out.apex});
    if (!d || *d != (n - 3) / 2)
        throw BuildError("Internal", "apex strip end distance is off");
    return out;
}

// ---------------------------------------------------------------------------
// Series-parallel graphs
// ---------------------------------------------------------------------------

SPGraph SPGraph::edge() {
    SPGraph g;
    g.nodes.push_back({Node::Op::Edge, -1, -1});
    g.root = 0;
    return g;
}

namespace {
SPGraph combine(SPGraph l, SPGraph r, SPGraph::Node::Op op) {
    int off = int(l.nodes.size());
    for (auto node : r.nodes) {
        if (node.left >= 0) node.left += off;
        if (node.right >= 0) node.right += off;
        l.nodes.push_back(node);
    }
    l.nodes.push_back({op, l.root, r.root + off});
    l.root = int(l.nodes.size()) - 1;
    return l;
}
} // namespace

SPGraph SPGraph::series(SPGraph l, SPGraph r) {
    return combine(std::move(l), std::move(r), Node::Op::Series);
}
SPGraph SPGraph::parallel(SPGraph l, SPGraph r) {
    return combine(std::move(l), std::move(r), Node::Op::Parallel);
}

int SPGraph::edge_count(int node) const {
    if (node < 0) node = root;
    const Node& nd = nodes[node];
    if (nd.op == Node::Op::Edge) return 1;
    return edge_count(nd.left) + edge_count(nd.right);
}

bool SPGraph::terminals_adjacent(int node) const {
    if (node < 0) node = root;
    const Node& nd = nodes[node];
    switch (nd.op) {
    case Node::Op::Edge: return true;
    case Node::Op::Series: return false;
    case Node::Op::Parallel:
        return terminals_adjacent(nd.left) || terminals_adjacent(nd.right);
    }
    return false;
}

SPMaterialized materialize_sp(const SPGraph& G) {
    SPMaterialized M;
    M.node_terminals.assign(G.nodes.size(), {-1, -1});
    int next = 2;
    auto rec = [&](auto&& self, int node, Vertex s, Vertex t) -> void {
        M.node_terminals[node] = {s, t};
        const auto& nd = G.nodes[node];
        switch (nd.op) {
        case SPGraph::Node::Op::Edge:
            M.edges.push_back({s, t});
            break;
        case SPGraph::Node::Op::Series: {
            Vertex mid = next++;
            self(self, nd.left, s, mid);
            self(self, nd.right, mid, t);
            break;
        }
        case SPGraph::Node::Op::Parallel:
            self(self, nd.left, s, t);
            self(self, nd.right, s, t);
            break;
        }
    };
    rec(rec, G.root, 0, 1);
    M.n = next;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [a, b] : M.edges)
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw BuildError("NotSimple", "parallel composition duplicates an edge");
    return M;
}

namespace {

int sp_height(int m) {
    int lg = 0;
    while ((1 << lg) < m) ++lg;
    return 2 * lg + 2;
}

// Recursive layout. Invariants at every level: height exactly sp_height(m);
// terminal s on the top-right corner, t on the bottom-right corner; any
// column containing s (t) has its topmost (bottommost) cell labelled s (t).
GridRep sp_build(const SPGraph& G, const SPMaterialized& M, int node) {
    const auto& nd = G.nodes[node];
    auto [s, t] = M.node_terminals[node];
    int m = G.edge_count(node);
    int H = sp_height(m);

    auto pad_to = [](GridRep R, int H2) {
        while (R.height < H2) {
            R.labels.insert(R.labels.begin(), R.labels.front());
            ++R.height;
        }
        return R;
    };

    if (nd.op == SPGraph::Node::Op::Edge) {
        GridRep R;
        R.height = 2;
        R.width = 1;
        R.labels = {{s}, {t}};
        return R;
    }

    int ml = G.edge_count(nd.left), mr = G.edge_count(nd.right);

    if (nd.op == SPGraph::Node::Op::Parallel) {
        int big = nd.left, small = nd.right;
        if (ml < mr) std::swap(big, small);
        GridRep A = pad_to(sp_build(G, M, big), H);
        GridRep B = sp_build(G, M, small);
        GridRep R;
        R.height = H;
        R.width = A.width + B.width;
        R.labels.assign(H, std::vector<Vertex>(R.width));
        for (int r = 0; r < H; ++r)
            for (int c = 0; c < A.width; ++c) R.labels[r][c] = A.labels[r][c];
        for (int c = 0; c < B.width; ++c) {
            R.labels[0][A.width + c] = s;
            for (int r = 0; r < B.height; ++r)
                R.labels[1 + r][A.width + c] = B.labels[r][c];
            for (int r = B.height + 1; r < H; ++r) R.labels[r][A.width + c] = t;
        }
        return R;
    }

    // Series: left has terminals (s, x), right (x, t).
    Vertex x = M.node_terminals[nd.left].second;
    GridRep R;
    R.height = H;
    if (ml >= mr) {
        GridRep A = pad_to(sp_build(G, M, nd.left), H);
        GridRep B = sp_build(G, M, nd.right);
        R.width = A.width + 1 + B.width;
        R.labels.assign(H, std::vector<Vertex>(R.width));
        for (int r = 0; r < H; ++r)
            for (int c = 0; c < A.width; ++c) R.labels[r][c] = A.labels[r][c];
        R.labels[0][A.width] = s;
        for (int r = 1; r < H; ++r) R.labels[r][A.width] = x;
        for (int c = 0; c < B.width; ++c) {
            int cc = A.width + 1 + c;
            R.labels[0][cc] = s;
            R.labels[1][cc] = x;
            for (int r = 0; r < B.height; ++r) R.labels[2 + r][cc] = B.labels[r][c];
            for (int r = B.height + 2; r < H; ++r) R.labels[r][cc] = t;
        }
    } else {
        GridRep B = pad_to(sp_build(G, M, nd.right), H);
        GridRep A = sp_build(G, M, nd.left);
        R.width = B.width + 1 + A.width;
        R.labels.assign(H, std::vector<Vertex>(R.width));
        for (int r = 0; r < H; ++r)
            for (int c = 0; c < B.width; ++c) R.labels[r][c] = B.labels[r][c];
        for (int r = 0; r + 1 < H; ++r) R.labels[r][B.width] = x;
        R.labels[H - 1][B.width] = t;
        for (int c = 0; c < A.width; ++c) {
            int cc = B.width + 1 + c;
            R.labels[H - 1][cc] = t;
            R.labels[H - 2][cc] = x;
            int top = H - 2 - A.height;
            for (int r = 0; r < A.height; ++r) R.labels[top + r][cc] = A.labels[r][c];
            for (int r = 0; r < top; ++r) R.labels[r][cc] = s;
        }
    }
    return R;
}

} // namespace

GridRep sp_gridrep(const SPGraph& G, int node) {
    SPMaterialized M = materialize_sp(G);
    return sp_build(G, M, node < 0 ? G.root : node);
}

SPGraph random_sp(int m, std::uint64_t seed) {
    if (m < 1) throw BuildError("InvalidVertex", "random_sp needs m >= 1");
    std::mt19937_64 rng(seed);
    auto rec = [&](auto&& self, int edges) -> SPGraph {
        if (edges == 1) return SPGraph::edge();
        while (true) {
            int m1 = 1 + int(rng() % std::uint64_t(edges - 1));
            bool par = (rng() % 2) == 1;
            SPGraph l = self(self, m1);
            SPGraph r = self(self, edges - m1);
            if (par && l.terminals_adjacent() && r.terminals_adjacent())
                continue; // would duplicate the terminal edge; redraw
            return par ? SPGraph::parallel(std::move(l), std::move(r))
                       : SPGraph::series(std::move(l), std::move(r));
        }
    };
    return rec(rec, m);
}

} // namespace heightlab
