#include "heightlab/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace heightlab {

namespace {

constexpr int kMaxSolverN = 15; // curves pack into 4-bit slots of a u64

struct StateKey {
    std::uint64_t curve = 0;
    std::uint32_t swept = 0;
    bool operator==(const StateKey& o) const {
        return curve == o.curve && swept == o.swept;
    }
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        return std::size_t(hash_mix(hash_mix(0x9e3779b97f4a7c15ULL, k.curve), k.swept));
    }
};

std::uint64_t pack_curve(const Curve& c) {
    std::uint64_t p = std::uint64_t(c.size()) << 60;
    for (std::size_t i = 0; i < c.size(); ++i)
        p |= std::uint64_t(c[i] & 0xf) << (4 * i);
    return p;
}

struct AnchorSearch {
    const Triangulation* T;
    OuterAnchor anchor;
    bool simple;
    std::uint32_t inner_mask = 0;
    std::vector<std::uint32_t> faces_at; // inner faces per vertex
    std::vector<std::pair<Vertex, Vertex>> s_edges, t_edges;

    void init(const Triangulation& t, OuterAnchor a, bool simple_mode) {
        T = &t;
        anchor = std::move(a);
        simple = simple_mode;
        inner_mask = 0;
        for (int fi = 0; fi < int(t.faces.size()); ++fi)
            if (!(anchor.kind == OuterAnchor::Kind::Face && fi == anchor.face))
                inner_mask |= (1u << fi);
        faces_at.assign(t.n, 0);
        for (int fi = 0; fi < int(t.faces.size()); ++fi)
            for (Vertex v : t.faces[fi].cycle) faces_at[v] |= (1u << fi);
        for (Vertex v = 0; v < t.n; ++v) faces_at[v] &= inner_mask;
        auto edges_of = [](const std::vector<Vertex>& path) {
            std::vector<std::pair<Vertex, Vertex>> out;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                out.push_back({path[i], path[i + 1]});
            return out;
        };
        s_edges = edges_of(anchor.s_path);
        t_edges = edges_of(anchor.t_path);
    }

    std::uint32_t present_mask(const Curve& c) const {
        std::uint32_t m = 0;
        for (Vertex v : c) m |= (1u << v);
        return m;
    }
    std::uint32_t retired_mask(const Curve& c) const {
        std::uint32_t present = present_mask(c), m = 0;
        for (Vertex v = 0; v < T->n; ++v)
            if (!(present & (1u << v)) && (faces_at[v] & current_swept))
                m |= (1u << v);
        return m;
    }
    // set before generating moves for a state
    std::uint32_t current_swept = 0;

    int occurrences(const Curve& c, Vertex v) const {
        return int(std::count(c.begin(), c.end(), v));
    }

    // All legal moves from (c, swept) under the monotone sweep discipline:
    // each face flipped once, positively; vertices enter only if never
    // retired; a vertex's final departure needs all its faces swept.
    void gen_moves(const Curve& c, std::uint32_t swept, int k,
                   std::vector<std::pair<Move, std::uint32_t>>& out) {
        out.clear();
        current_swept = swept;
        std::uint32_t present = present_mask(c);
        std::uint32_t retired = retired_mask(c);
        int len = int(c.size());
        auto blocked_in = [&](Vertex v) {
            return (present & (1u << v)) || (retired & (1u << v));
        };
        auto covered_out = [&](Vertex v, std::uint32_t with) {
            return (faces_at[v] & ~(swept | with)) == 0;
        };
        auto try_move = [&](const Move& m) {
            auto r = apply_move(*T, anchor, c, m, !simple);
            if (!r) return;
            if (int(r->curve.size()) > k) return;
            std::uint32_t flips = 0;
            for (auto [f, d] : r->flips) {
                if (d != +1) return;
                std::uint32_t bit = 1u << f;
                if ((swept & bit) || (flips & bit)) return;
                flips |= bit;
            }
            out.push_back({m, swept | flips});
        };

        // face flips, grow then shrink, left to right
        for (int p = 0; p + 1 < len; ++p) {
            if (len >= k) break;
            for (int fi : {T->face_of_arc(c[p], c[p + 1]), T->face_of_arc(c[p + 1], c[p])}) {
                if (fi < 0 || !(inner_mask & (1u << fi))) continue;
                if (swept & (1u << fi)) continue;
                Vertex z = T->faces[fi].apex(c[p], c[p + 1]);
                if (z < 0 || blocked_in(z)) continue;
                try_move(Move::face_flip(fi, p, Move::Dir::Grow));
            }
        }
        for (int p = 0; p + 2 < len; ++p) {
            Vertex z = c[p + 1];
            for (int fi : {T->face_of_arc(c[p], z), T->face_of_arc(z, c[p])}) {
                if (fi < 0 || !(inner_mask & (1u << fi))) continue;
                if (swept & (1u << fi)) continue;
                if (!T->faces[fi].contains(c[p + 2])) continue;
                if (occurrences(c, z) == 1 && !covered_out(z, 1u << fi)) continue;
                try_move(Move::face_flip(fi, p, Move::Dir::Shrink));
            }
        }
        // edge slides
        for (int p = 1; p + 1 < len; ++p) {
            Vertex b = c[p];
            for (Vertex d : T->neighbors(b)) {
                if (blocked_in(d)) continue;
                Move m = Move::edge_slide(b, d, p);
                auto r = apply_move(*T, anchor, c, m, !simple);
                if (!r) continue;
                std::uint32_t flips = 0;
                bool ok = true;
                for (auto [f, dd] : r->flips) {
                    std::uint32_t bit = 1u << f;
                    if (dd != +1 || (swept & bit) || (flips & bit)) ok = false;
                    flips |= bit;
                }
                if (!ok) continue;
                if (occurrences(c, b) == 1 && !covered_out(b, flips)) continue;
                out.push_back({m, swept | flips});
            }
        }
        // boundary edge slides
        if (len >= 2) {
            for (auto [a, bb] : s_edges) {
                for (auto [x, y] : {std::pair{a, bb}, std::pair{bb, a}}) {
                    if (c.front() != x || blocked_in(y)) continue;
                    Move m = Move::boundary_edge_slide(x, y, Move::End::Start);
                    auto r = apply_move(*T, anchor, c, m, !simple);
                    if (!r) continue;
                    std::uint32_t flips = 0;
                    bool ok = true;
                    for (auto [f, dd] : r->flips) {
                        std::uint32_t bit = 1u << f;
                        if (dd != +1 || (swept & bit)) ok = false;
                        flips |= bit;
                    }
                    if (!ok) continue;
                    if (occurrences(c, x) == 1 && !covered_out(x, flips)) continue;
                    out.push_back({m, swept | flips});
                }
            }
            for (auto [a, bb] : t_edges) {
                for (auto [x, y] : {std::pair{a, bb}, std::pair{bb, a}}) {
                    if (c.back() != x || blocked_in(y)) continue;
                    Move m = Move::boundary_edge_slide(x, y, Move::End::Finish);
                    auto r = apply_move(*T, anchor, c, m, !simple);
                    if (!r) continue;
                    std::uint32_t flips = 0;
                    bool ok = true;
                    for (auto [f, dd] : r->flips) {
                        std::uint32_t bit = 1u << f;
                        if (dd != +1 || (swept & bit)) ok = false;
                        flips |= bit;
                    }
                    if (!ok) continue;
                    if (occurrences(c, x) == 1 && !covered_out(x, flips)) continue;
                    out.push_back({m, swept | flips});
                }
            }
        }
        // boundary moves
        for (auto [a, bb] : s_edges) {
            for (auto [x, y] : {std::pair{a, bb}, std::pair{bb, a}}) {
                if (len < k && c.front() == x && !blocked_in(y))
                    try_move(Move::boundary_move(x, y, Move::End::Start, Move::Dir::Grow));
                if (len >= 2 && c[0] == y && c[1] == x &&
                    (occurrences(c, y) > 1 || covered_out(y, 0)))
                    try_move(Move::boundary_move(x, y, Move::End::Start, Move::Dir::Shrink));
            }
        }
        for (auto [a, bb] : t_edges) {
            for (auto [x, y] : {std::pair{a, bb}, std::pair{bb, a}}) {
                if (len < k && c.back() == x && !blocked_in(y))
                    try_move(Move::boundary_move(x, y, Move::End::Finish, Move::Dir::Grow));
                if (len >= 2 && c[len - 1] == y && c[len - 2] == x &&
                    (occurrences(c, y) > 1 || covered_out(y, 0)))
                    try_move(Move::boundary_move(x, y, Move::End::Finish, Move::Dir::Shrink));
            }
        }
        // spikes / unspikes (general mode only)
        if (!simple) {
            for (int p = 0; p < len && len + 2 <= k; ++p)
                for (Vertex y : T->neighbors(c[p])) {
                    if (blocked_in(y)) continue;
                    try_move(Move::spike(c[p], y, p));
                }
            for (int p = 0; p + 2 < len; ++p) {
                if (c[p] != c[p + 2]) continue;
                Vertex y = c[p + 1];
                if (occurrences(c, y) == 1 && !covered_out(y, 0)) continue;
                try_move(Move::unspike(c[p], y, p));
            }
        }
    }
};

struct LevelOutcome {
    enum class Kind { Found, Exhausted, Budget } kind = Kind::Exhausted;
    Homotopy cert;
    std::uint64_t nodes = 0;
};

LevelOutcome search_anchor(const Triangulation& T, const OuterAnchor& anchor,
                           bool simple, int k, std::uint64_t budget) {
    AnchorSearch ctx;
    ctx.init(T, anchor, simple);

    Curve start{anchor.u};
    StateKey init{pack_curve(start), 0};
    StateKey goal{pack_curve(Curve{anchor.v}), ctx.inner_mask};

    std::unordered_map<StateKey, std::pair<StateKey, Move>, StateKeyHash> parent;
    std::unordered_set<StateKey, StateKeyHash> visited;
    std::deque<std::pair<StateKey, Curve>> queue;
    visited.insert(init);
    queue.push_back({init, start});

    LevelOutcome out;
    std::vector<std::pair<Move, std::uint32_t>> moves;
    while (!queue.empty()) {
        auto [key, curve] = queue.front();
        queue.pop_front();
        if (++out.nodes > budget) {
            out.kind = LevelOutcome::Kind::Budget;
            return out;
        }
        ctx.gen_moves(curve, key.swept, k, moves);
        for (auto& [m, swept2] : moves) {
            auto r = apply_move(T, anchor, curve, m, !simple);
            StateKey nxt{pack_curve(r->curve), swept2};
            if (visited.count(nxt)) continue;
            visited.insert(nxt);
            parent.emplace(nxt, std::make_pair(key, m));
            if (nxt == goal) {
                // Walk back, then replay forward for the exact curves.
                std::vector<Move> seq;
                StateKey cur = nxt;
                while (!(cur == init)) {
                    auto it = parent.find(cur);
                    seq.push_back(it->second.second);
                    cur = it->second.first;
                }
                std::reverse(seq.begin(), seq.end());
                Homotopy H;
                H.anchor = anchor;
                H.simple = simple;
                H.curves.push_back(start);
                for (const Move& mv : seq) {
                    auto rr = apply_move(T, anchor, H.curves.back(), mv, !simple);
                    H.curves.push_back(rr->curve);
                    H.moves.push_back(mv);
                }
                out.kind = LevelOutcome::Kind::Found;
                out.cert = std::move(H);
                return out;
            }
            queue.push_back({nxt, r->curve});
        }
    }
    out.kind = LevelOutcome::Kind::Exhausted;
    return out;
}

std::vector<OuterAnchor> enumerate_anchors(const Triangulation& T, bool simple) {
    std::vector<OuterAnchor> anchors;
    for (int fi = 0; fi < int(T.faces.size()); ++fi) {
        auto cyc = T.faces[fi].sorted();
        for (Vertex u : cyc)
            for (Vertex v : cyc) {
                if (u == v) {
                    if (simple) continue;
                    anchors.push_back(make_face_anchor(T, fi, u, v, true));
                    anchors.push_back(make_face_anchor(T, fi, u, v, false));
                } else {
                    anchors.push_back(make_face_anchor(T, fi, u, v));
                }
            }
    }
    if (!simple) {
        for (auto [a, b] : T.edges()) {
            anchors.push_back(make_edge_anchor(T, a, b, a, b));
            anchors.push_back(make_edge_anchor(T, a, b, b, a));
            anchors.push_back(make_edge_anchor(T, a, b, a, a, true));
            anchors.push_back(make_edge_anchor(T, a, b, a, a, false));
            anchors.push_back(make_edge_anchor(T, a, b, b, b, true));
            anchors.push_back(make_edge_anchor(T, a, b, b, b, false));
        }
    }
    return anchors;
}

int solver_threads(const SolveOptions& opts) {
    if (opts.threads > 0) return opts.threads;
    if (const char* env = std::getenv("HEIGHTLAB_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

HeightResult exact_search(const Triangulation& T, bool simple, const SolveOptions& opts) {
    if (T.n > kMaxSolverN)
        throw BuildError("TooLarge", "solver handles n <= " + std::to_string(kMaxSolverN));
    auto anchors = enumerate_anchors(T, simple);
    int lb = std::max({2, pathwidth_exact(T).value, 2 * outerplanarity(T).value - 1});
    int threads = solver_threads(opts);

    HeightResult res;
    bool budget_hit = false;
    for (int k = lb; k <= T.n; ++k) {
        std::vector<LevelOutcome> outs(anchors.size());
        if (threads <= 1) {
            for (std::size_t i = 0; i < anchors.size(); ++i) {
                outs[i] = search_anchor(T, anchors[i], simple, k, opts.node_budget);
                res.nodes += outs[i].nodes;
                if (outs[i].kind == LevelOutcome::Kind::Found) break;
            }
        } else {
            std::atomic<std::size_t> next{0};
            std::atomic<std::size_t> best_found{anchors.size()};
            auto worker = [&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= anchors.size()) break;
                    if (i > best_found.load()) continue; // cannot win
                    outs[i] = search_anchor(T, anchors[i], simple, k, opts.node_budget);
                    if (outs[i].kind == LevelOutcome::Kind::Found) {
                        std::size_t cur = best_found.load();
                        while (i < cur && !best_found.compare_exchange_weak(cur, i)) {
                        }
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
            for (auto& o : outs) res.nodes += o.nodes;
        }
        for (std::size_t i = 0; i < anchors.size(); ++i) {
            if (outs[i].kind == LevelOutcome::Kind::Found) {
                res.value = k;
                res.cert = outs[i].cert;
                res.optimal = !budget_hit;
                return res;
            }
            if (outs[i].kind == LevelOutcome::Kind::Budget) budget_hit = true;
        }
    }
    throw BuildError("BudgetExceeded",
                     budget_hit ? "search budget exhausted before any certificate"
                                : "no homotopy found up to height n (internal error)");
}

} // namespace

HeightResult shh_exact(const Triangulation& T, const SolveOptions& opts) {
    return exact_search(T, true, opts);
}

HeightResult hh_exact(const Triangulation& T, const SolveOptions& opts) {
    return exact_search(T, false, opts);
}

int conversion_width_envelope(const Homotopy& H) {
    int k = homotopy_height(H);
    return int(H.moves.size()) * (2 * k + 2) + 1;
}

// ---------------------------------------------------------------------------
// Independent grid search oracle
// ---------------------------------------------------------------------------

namespace {

struct OracleState {
    std::vector<Vertex> col;  // previous column labels
    std::vector<int> comp;    // per-cell component id (normalized)
    std::uint32_t seen = 0, closed = 0;
    std::uint32_t edges = 0; // realized edge bits
    bool operator==(const OracleState& o) const {
        return col == o.col && comp == o.comp && seen == o.seen && closed == o.closed &&
               edges == o.edges;
    }
};

struct OracleStateHash {
    std::size_t operator()(const OracleState& s) const {
        std::uint64_t h = 0;
        for (Vertex v : s.col) h = hash_mix(h, std::uint64_t(v));
        for (int c : s.comp) h = hash_mix(h, std::uint64_t(c));
        h = hash_mix(h, s.seen);
        h = hash_mix(h, s.closed);
        h = hash_mix(h, s.edges);
        return std::size_t(h);
    }
};

} // namespace

OracleResult gmh_grid_oracle(const Triangulation& T, int h, int w_cap,
                             std::optional<int> width_envelope) {
    OracleResult out;
    if (T.n > 10 || h > 6 || h < 1 || w_cap < 1) return out; // inconclusive

    std::vector<std::pair<Vertex, Vertex>> edge_list = T.edges();
    int m = int(edge_list.size());
    auto edge_bit = [&](Vertex a, Vertex b) -> int {
        for (int i = 0; i < m; ++i) {
            auto [x, y] = edge_list[i];
            if ((x == a && y == b) || (x == b && y == a)) return i;
        }
        return -1;
    };

    // All columns proper on their own: vertically adjacent labels equal or
    // adjacent in T.
    std::vector<std::vector<Vertex>> columns;
    {
        std::vector<Vertex> col(h, 0);
        while (true) {
            bool ok = true;
            for (int r = 0; r + 1 < h && ok; ++r)
                if (col[r] != col[r + 1] && !T.has_edge(col[r], col[r + 1])) ok = false;
            if (ok) columns.push_back(col);
            int i = h - 1;
            while (i >= 0 && col[i] == T.n - 1) col[i--] = 0;
            if (i < 0) break;
            ++col[i];
        }
    }

    auto advance = [&](const OracleState& s, const std::vector<Vertex>& col)
        -> std::optional<OracleState> {
        OracleState t;
        t.col = col;
        t.seen = s.seen;
        t.closed = s.closed;
        t.edges = s.edges;
        // closed vertices may not reappear
        for (Vertex v : col)
            if (t.closed & (1u << v)) return std::nullopt;
        // horizontal compatibility + component carry-over (union-find over
        // the 2h cells of the seam)
        std::vector<int> uf(2 * h);
        for (int i = 0; i < 2 * h; ++i) uf[i] = i;
        auto find = [&](auto&& self, int x) -> int {
            return uf[x] == x ? x : uf[x] = self(self, uf[x]);
        };
        auto unite = [&](int a, int b) { uf[find(find, a)] = find(find, b); };
        for (int r = 0; r < h; ++r) {
            Vertex a = s.col[r], b = col[r];
            if (a == b)
                unite(r, h + r);
            else if (T.has_edge(a, b))
                t.edges |= (1u << edge_bit(a, b));
            else
                return std::nullopt;
        }
        for (int r = 0; r + 1 < h; ++r) {
            if (s.col[r] == s.col[r + 1]) unite(r, r + 1);
            if (col[r] == col[r + 1])
                unite(h + r, h + r + 1);
            else
                t.edges |= (1u << edge_bit(col[r], col[r + 1]));
        }
        // previous components must either extend or close their vertex
        // entirely (no other live component, no future reappearance)
        std::vector<char> carried(2 * h, 0);
        for (int r = 0; r < h; ++r) carried[find(find, h + r)] = 1;
        // old components: group prev cells by (old comp id); each group maps
        // to new roots via the seam union; if any old component has no cell
        // whose root carries into the new column, its vertex dies here.
        std::vector<char> old_comp_alive(h, 0);
        for (int r = 0; r < h; ++r)
            if (carried[find(find, r)]) old_comp_alive[s.comp[r]] = 1;
        std::uint32_t dying = 0;
        for (int r = 0; r < h; ++r)
            if (!old_comp_alive[s.comp[r]]) dying |= (1u << s.col[r]);
        if (dying) {
            for (Vertex v = 0; v < T.n; ++v) {
                if (!(dying & (1u << v))) continue;
                // every old cell of v must be in a dying component, and v
                // must not appear in the new column
                for (int r = 0; r < h; ++r)
                    if (s.col[r] == v && old_comp_alive[s.comp[r]]) return std::nullopt;
                for (int r = 0; r < h; ++r)
                    if (col[r] == v) return std::nullopt;
                t.closed |= (1u << v);
            }
        }
        // merged old components (two prev comps united through the seam)
        // stay consistent automatically; normalize new component ids
        t.comp.assign(h, -1);
        std::vector<int> order;
        for (int r = 0; r < h; ++r) {
            int root = find(find, h + r);
            int id = -1;
            for (std::size_t i = 0; i < order.size(); ++i)
                if (order[i] == root) id = int(i);
            if (id < 0) {
                id = int(order.size());
                order.push_back(root);
            }
            t.comp[r] = id;
        }
        // two cells of the same vertex in separate components are fine for
        // now (they may merge later), but distinct vertices sharing a
        // component id cannot happen (components are per contiguous label
        // runs united across equal labels only)
        for (Vertex v : col) t.seen |= (1u << v);
        return t;
    };

    auto full_mask = std::uint32_t((std::uint64_t(1) << m) - 1);
    auto seen_mask = std::uint32_t((std::uint64_t(1) << T.n) - 1);
    auto is_goal = [&](const OracleState& s) {
        if (s.seen != seen_mask || s.edges != full_mask) return false;
        // final column: each vertex's cells must already be one component
        for (int r = 0; r < h; ++r)
            for (int q = r + 1; q < h; ++q)
                if (s.col[r] == s.col[q] && s.comp[r] != s.comp[q]) return false;
        return true;
    };

    std::unordered_map<OracleState, std::pair<int, int>, OracleStateHash> parent;
    // parent value: (index of predecessor in `states`, column id); -1 root
    std::vector<OracleState> states;
    std::unordered_map<OracleState, int, OracleStateHash> index_of;

    std::vector<int> frontier;
    for (std::size_t ci = 0; ci < columns.size(); ++ci) {
        OracleState s;
        s.col = columns[ci];
        s.comp.assign(h, -1);
        std::vector<int> order;
        // initial components: contiguous runs of equal labels
        int id = -1;
        for (int r = 0; r < h; ++r) {
            if (r == 0 || s.col[r] != s.col[r - 1]) ++id;
            s.comp[r] = id;
        }
        for (int r = 0; r + 1 < h; ++r)
            if (s.col[r] != s.col[r + 1]) s.edges |= (1u << edge_bit(s.col[r], s.col[r + 1]));
        for (Vertex v : s.col) s.seen |= (1u << v);
        if (!index_of.count(s)) {
            index_of[s] = int(states.size());
            states.push_back(s);
            parent[s] = {-1, int(ci)};
            frontier.push_back(int(states.size()) - 1);
        }
    }

    auto reconstruct = [&](const OracleState& goal_state) {
        std::vector<int> cols;
        OracleState cur = goal_state;
        while (true) {
            auto [pi, ci] = parent[cur];
            cols.push_back(ci);
            if (pi < 0) break;
            cur = states[pi];
        }
        std::reverse(cols.begin(), cols.end());
        GridRep R;
        R.height = h;
        R.width = int(cols.size());
        R.labels.assign(h, std::vector<Vertex>(R.width));
        for (int c = 0; c < R.width; ++c)
            for (int r = 0; r < h; ++r) R.labels[r][c] = columns[cols[c]][r];
        return R;
    };

    for (int width = 1; width <= w_cap; ++width) {
        for (int si : frontier) {
            if (is_goal(states[si])) {
                out.status = OracleResult::Status::Feasible;
                out.rep = reconstruct(states[si]);
                out.width = width;
                return out;
            }
        }
        if (width == w_cap) break;
        std::vector<int> next_frontier;
        for (int si : frontier) {
            OracleState s = states[si];
            for (std::size_t ci = 0; ci < columns.size(); ++ci) {
                auto t = advance(s, columns[ci]);
                if (!t) continue;
                if (index_of.count(*t)) continue;
                index_of[*t] = int(states.size());
                parent[*t] = {si, int(ci)};
                states.push_back(*t);
                next_frontier.push_back(int(states.size()) - 1);
            }
        }
        frontier = std::move(next_frontier);
        if (frontier.empty()) break;
    }

    out.status = (width_envelope && w_cap >= *width_envelope)
                     ? OracleResult::Status::Infeasible
                     : OracleResult::Status::Inconclusive;
    return out;
}

ParameterReport verify_chain(const Triangulation& T, const SolveOptions& opts) {
    ParameterReport rep;
    rep.graph_hash = T.content_hash();
    rep.n = T.n;
    rep.pw_result = pathwidth_exact(T);
    rep.pw = rep.pw_result.value;
    rep.op_result = outerplanarity(T);
    rep.op = rep.op_result.value;
    rep.shh_result = shh_exact(T, opts);
    rep.shh = rep.shh_result.value;
    rep.hh_result = hh_exact(T, opts);
    rep.hh = rep.hh_result.value;

    auto flag = [&](const std::string& s) { rep.violations.push_back(s); };
    if (auto bad = validate_path_decomposition(T, rep.pw_result.cert))
        flag("pathwidth certificate: " + bad->rule);
    if (rep.pw_result.cert.width() != rep.pw) flag("pathwidth certificate width mismatch");
    if (auto bad = validate_peeling(T, rep.op_result.cert))
        flag("peeling certificate: " + bad->rule);
    if (int(rep.op_result.cert.layers.size()) != rep.op) flag("peeling layer count mismatch");
    if (auto bad = validate_homotopy(T, rep.shh_result.cert))
        flag("sHh certificate: " + bad->rule);
    if (homotopy_height(rep.shh_result.cert) != rep.shh) flag("sHh certificate height");
    if (auto bad = validate_homotopy(T, rep.hh_result.cert))
        flag("Hh certificate: " + bad->rule);
    if (homotopy_height(rep.hh_result.cert) != rep.hh) flag("Hh certificate height");

    if (!(rep.pw <= rep.hh)) flag("chain: pw <= Hh fails");
    if (!(rep.hh <= rep.shh)) flag("chain: Hh <= sHh fails");
    if (!(2 * rep.op - 1 <= rep.hh)) flag("chain: 2op-1 <= Hh fails");
    rep.strict_pw_lt_hh = rep.pw < rep.hh;
    rep.strict_hh_lt_shh = rep.hh < rep.shh;
    rep.chain_ok = rep.violations.empty();
    return rep;
}

} // namespace heightlab
