#include "heightlab/homotopy.hpp"

#include <algorithm>
#include <map>

namespace heightlab {

namespace {

bool face_has_arc(const Triangulation& T, int fi, Vertex a, Vertex b) {
    const auto& c = T.faces[fi].cycle;
    for (int j = 0; j < 3; ++j)
        if (c[j] == a && c[(j + 1) % 3] == b) return true;
    return false;
}

std::vector<Vertex> cycle_path(const std::array<Vertex, 3>& cyc, Vertex from, Vertex to) {
    int i = 0;
    while (cyc[i] != from) ++i;
    std::vector<Vertex> path{from};
    int j = i;
    do {
        j = (j + 1) % 3;
        path.push_back(cyc[j]);
    } while (cyc[j] != to);
    return path;
}

std::vector<Vertex> full_cycle(const std::array<Vertex, 3>& cyc, Vertex from) {
    int i = 0;
    while (cyc[i] != from) ++i;
    return {cyc[i], cyc[(i + 1) % 3], cyc[(i + 2) % 3], cyc[i]};
}

} // namespace

OuterAnchor make_face_anchor(const Triangulation& T, int face, Vertex u, Vertex v,
                             bool trivial_s) {
    if (face < 0 || face >= int(T.faces.size()))
        throw BuildError("InvalidVertex", "anchor face out of range");
    const Face& f = T.faces[face];
    if (!f.contains(u) || !f.contains(v))
        throw BuildError("InvalidVertex", "anchor endpoints not on outer face");
    OuterAnchor a;
    a.kind = OuterAnchor::Kind::Face;
    a.face = face;
    a.u = u;
    a.v = v;
    if (u == v) {
        if (trivial_s) {
            a.s_path = {u};
            a.t_path = full_cycle(f.cycle, u);
        } else {
            a.s_path = full_cycle(f.cycle, u);
            a.t_path = {u};
        }
    } else {
        // Stored cycle direction is the clockwise outer boundary; the
        // boundary reads u, t(uv), v, s(vu) clockwise.
        a.t_path = cycle_path(f.cycle, u, v);
        auto s_rev = cycle_path(f.cycle, v, u);
        a.s_path.assign(s_rev.rbegin(), s_rev.rend());
    }
    return a;
}

OuterAnchor make_edge_anchor(const Triangulation& T, Vertex a, Vertex b, Vertex u,
                             Vertex v, bool trivial_s) {
    if (!T.has_edge(a, b)) throw BuildError("InvalidVertex", "anchor edge missing");
    if ((u != a && u != b) || (v != a && v != b))
        throw BuildError("InvalidVertex", "anchor endpoints not on outer edge");
    OuterAnchor an;
    an.kind = OuterAnchor::Kind::Edge;
    an.edge = {a, b};
    an.u = u;
    an.v = v;
    if (u == v) {
        Vertex other = (u == a) ? b : a;
        if (trivial_s) {
            an.s_path = {u};
            an.t_path = {u, other, u};
        } else {
            an.s_path = {u, other, u};
            an.t_path = {u};
        }
    } else {
        an.s_path = {u, v};
        an.t_path = {u, v};
    }
    return an;
}

Check validate_anchor(const Triangulation& T, const OuterAnchor& a) {
    if (a.u < 0 || a.u >= T.n || a.v < 0 || a.v >= T.n)
        return violation("anchor.endpoint", "endpoint out of range");
    if (a.kind == OuterAnchor::Kind::Face) {
        if (a.face < 0 || a.face >= int(T.faces.size()))
            return violation("anchor.face", "face index out of range");
        if (!T.faces[a.face].contains(a.u) || !T.faces[a.face].contains(a.v))
            return violation("anchor.endpoint", "endpoint not on outer face");
        for (bool ts : {true, false}) {
            OuterAnchor ref = make_face_anchor(T, a.face, a.u, a.v, ts);
            if (ref.s_path == a.s_path && ref.t_path == a.t_path) return std::nullopt;
            if (a.u != a.v) break; // unique derivation
        }
        return violation("anchor.paths", "s/t paths do not match the stored embedding");
    }
    if (!T.has_edge(a.edge[0], a.edge[1]))
        return violation("anchor.edge", "outer edge not an edge of the graph");
    for (bool ts : {true, false}) {
        OuterAnchor ref = make_edge_anchor(T, a.edge[0], a.edge[1], a.u, a.v, ts);
        if (ref.s_path == a.s_path && ref.t_path == a.t_path) return std::nullopt;
        if (a.u != a.v) break;
    }
    return violation("anchor.paths", "s/t paths do not match the doubled edge");
}

namespace {

// Faces a boundary-edge-slide may flip from the given side.
std::vector<int> bes_faces(const Triangulation& T, const OuterAnchor& a, Vertex x,
                           Vertex y, Move::End end) {
    std::vector<int> out;
    int f1 = T.face_of_arc(x, y), f2 = T.face_of_arc(y, x);
    if (a.kind == OuterAnchor::Kind::Face) {
        if (f1 >= 0 && f1 != a.face) out.push_back(f1);
        if (f2 >= 0 && f2 != a.face) out.push_back(f2);
        return out;
    }
    // Doubled edge: the s-copy borders the face left of u->v, the t-copy the
    // face left of v->u. With u == v both copies lie on the non-trivial side.
    Vertex eu = a.u, ev = a.v;
    if (eu == ev) {
        const auto& path = (end == Move::End::Start) ? a.s_path : a.t_path;
        if (path.size() <= 1) return out;
        if (f1 >= 0) out.push_back(f1);
        if (f2 >= 0) out.push_back(f2);
        return out;
    }
    int side = (end == Move::End::Start) ? T.face_of_arc(eu, ev) : T.face_of_arc(ev, eu);
    if (side >= 0) out.push_back(side);
    return out;
}

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

} // namespace

std::optional<MoveOutcome> apply_move(const Triangulation& T, const OuterAnchor& anchor,
                                      const Curve& c, const Move& m, bool allow_spikes,
                                      std::string* why) {
    auto err = [&](const std::string& msg) -> std::optional<MoveOutcome> {
        fail(why, msg);
        return std::nullopt;
    };
    int k = int(c.size());
    MoveOutcome out;
    switch (m.kind) {
    case Move::Kind::FaceFlip: {
        if (m.face < 0 || m.face >= int(T.faces.size())) return err("face out of range");
        if (anchor.kind == OuterAnchor::Kind::Face && m.face == anchor.face)
            return err("cannot flip the outer face");
        const Face& f = T.faces[m.face];
        if (m.dir == Move::Dir::Grow) {
            if (m.pos < 0 || m.pos + 1 >= k) return err("flip position out of range");
            Vertex x = c[m.pos], y = c[m.pos + 1];
            if (!f.contains(x) || !f.contains(y)) return err("flipped face misses curve edge");
            Vertex z = f.apex(x, y);
            if (z < 0) return err("flipped face has no apex for this edge");
            out.curve = c;
            out.curve.insert(out.curve.begin() + m.pos + 1, z);
            out.flips.push_back({m.face, face_has_arc(T, m.face, y, x) ? +1 : -1});
        } else {
            if (m.pos < 0 || m.pos + 2 >= k) return err("flip position out of range");
            Vertex x = c[m.pos], z = c[m.pos + 1], y = c[m.pos + 2];
            if (x == y) return err("degenerate flip pattern");
            auto s = f.sorted();
            std::array<Vertex, 3> t{x, y, z};
            std::sort(t.begin(), t.end());
            if (s != t) return err("face does not match x-z-y pattern");
            if (!T.has_edge(x, y)) return err("shortcut edge missing");
            out.curve = c;
            out.curve.erase(out.curve.begin() + m.pos + 1);
            out.flips.push_back({m.face, face_has_arc(T, m.face, z, x) ? +1 : -1});
        }
        return out;
    }
    case Move::Kind::EdgeSlide: {
        if (m.pos < 1 || m.pos + 1 >= k) return err("slide position out of range");
        Vertex z = c[m.pos - 1], x = c[m.pos], t = c[m.pos + 1];
        if (m.edge[0] != x) return err("slide edge does not start at curve vertex");
        Vertex y = m.edge[1];
        if (!T.has_edge(x, y)) return err("slide edge missing");
        int fa = T.face_of_arc(x, y), fb = T.face_of_arc(y, x);
        auto pick = [&](Vertex apex, Vertex arc_from, Vertex arc_to) {
            bool a_ok = fa >= 0 && T.faces[fa].contains(apex);
            bool b_ok = fb >= 0 && T.faces[fb].contains(apex);
            if (a_ok && b_ok) return face_has_arc(T, fa, arc_from, arc_to) ? fa : fb;
            return a_ok ? fa : (b_ok ? fb : -1);
        };
        int F1 = pick(z, x, z); // swept side of the z-x sub-arc
        int F2 = pick(t, t, x); // swept side of the x-t sub-arc
        if (F1 < 0 || F2 < 0) return err("slide faces do not exist");
        if (F1 == F2) return err("slide faces coincide");
        if (anchor.kind == OuterAnchor::Kind::Face &&
            (F1 == anchor.face || F2 == anchor.face))
            return err("slide uses the outer face");
        out.curve = c;
        out.curve[m.pos] = y;
        out.flips.push_back({F1, face_has_arc(T, F1, x, z) ? +1 : -1});
        out.flips.push_back({F2, face_has_arc(T, F2, t, x) ? +1 : -1});
        return out;
    }
    case Move::Kind::BoundaryMove: {
        const auto& path = (m.end == Move::End::Start) ? anchor.s_path : anchor.t_path;
        Vertex x = m.edge[0], y = m.edge[1];
        if (!anchor.path_has_edge(path, x, y))
            return err("boundary edge not on the required side");
        out.curve = c;
        if (m.dir == Move::Dir::Grow) {
            if (m.end == Move::End::Start) {
                if (c.front() != x) return err("curve does not start at boundary vertex");
                out.curve.insert(out.curve.begin(), y);
            } else {
                if (c.back() != x) return err("curve does not end at boundary vertex");
                out.curve.push_back(y);
            }
        } else {
            if (k < 2) return err("cannot shrink single-vertex curve");
            if (m.end == Move::End::Start) {
                if (c[0] != y || c[1] != x) return err("curve does not start with y-x");
                out.curve.erase(out.curve.begin());
            } else {
                if (c[k - 1] != y || c[k - 2] != x) return err("curve does not end with x-y");
                out.curve.pop_back();
            }
        }
        return out;
    }
    case Move::Kind::BoundaryEdgeSlide: {
        if (k < 2) return err("boundary edge-slide needs two curve vertices");
        const auto& path = (m.end == Move::End::Start) ? anchor.s_path : anchor.t_path;
        Vertex x = m.edge[0], y = m.edge[1];
        if (!anchor.path_has_edge(path, x, y))
            return err("boundary edge not on the required side");
        Vertex z = (m.end == Move::End::Start) ? c[1] : c[k - 2];
        Vertex endv = (m.end == Move::End::Start) ? c[0] : c[k - 1];
        if (endv != x) return err("curve endpoint is not at the slid edge");
        int face = -1;
        for (int fi : bes_faces(T, anchor, x, y, m.end))
            if (T.faces[fi].contains(z)) {
                face = fi;
                break;
            }
        if (face < 0) return err("no inner face {x,y,z} on this boundary side");
        out.curve = c;
        if (m.end == Move::End::Start) {
            out.curve[0] = y;
            out.flips.push_back({face, face_has_arc(T, face, z, x) ? +1 : -1});
        } else {
            out.curve[k - 1] = y;
            out.flips.push_back({face, face_has_arc(T, face, x, z) ? +1 : -1});
        }
        return out;
    }
    case Move::Kind::Spike: {
        if (!allow_spikes) return err("spikes are not allowed in simple homotopies");
        if (m.pos < 0 || m.pos >= k) return err("spike position out of range");
        Vertex x = m.edge[0], y = m.edge[1];
        if (c[m.pos] != x) return err("spike vertex mismatch");
        if (!T.has_edge(x, y)) return err("spike edge missing");
        out.curve = c;
        out.curve.insert(out.curve.begin() + m.pos + 1, x);
        out.curve.insert(out.curve.begin() + m.pos + 1, y);
        return out;
    }
    case Move::Kind::Unspike: {
        if (!allow_spikes) return err("unspikes are not allowed in simple homotopies");
        if (m.pos < 0 || m.pos + 2 >= k) return err("unspike position out of range");
        Vertex x = m.edge[0], y = m.edge[1];
        if (c[m.pos] != x || c[m.pos + 1] != y || c[m.pos + 2] != x)
            return err("curve does not match x-y-x at position");
        out.curve = c;
        out.curve.erase(out.curve.begin() + m.pos + 1, out.curve.begin() + m.pos + 3);
        return out;
    }
    }
    return err("unknown move kind");
}

Move inverse_move(const Move& m) {
    Move r = m;
    switch (m.kind) {
    case Move::Kind::FaceFlip:
        r.dir = (m.dir == Move::Dir::Grow) ? Move::Dir::Shrink : Move::Dir::Grow;
        break;
    case Move::Kind::EdgeSlide:
        r.edge = {m.edge[1], m.edge[0]};
        break;
    case Move::Kind::BoundaryMove:
        r.dir = (m.dir == Move::Dir::Grow) ? Move::Dir::Shrink : Move::Dir::Grow;
        break;
    case Move::Kind::BoundaryEdgeSlide:
        r.edge = {m.edge[1], m.edge[0]};
        break;
    case Move::Kind::Spike:
        r.kind = Move::Kind::Unspike;
        break;
    case Move::Kind::Unspike:
        r.kind = Move::Kind::Spike;
        break;
    }
    return r;
}

int homotopy_height(const Homotopy& H) {
    std::size_t mx = 0;
    for (const auto& c : H.curves) mx = std::max(mx, c.size());
    return int(mx);
}

std::vector<int> flip_numbers(const Triangulation& T, const Homotopy& H) {
    std::vector<int> totals(T.faces.size(), 0);
    for (std::size_t i = 0; i < H.moves.size(); ++i) {
        auto r = apply_move(T, H.anchor, H.curves[i], H.moves[i], !H.simple);
        if (!r) break;
        for (auto [f, d] : r->flips) totals[f] += d;
    }
    return totals;
}

Check validate_homotopy(const Triangulation& T, const Homotopy& H) {
    if (auto bad = validate_anchor(T, H.anchor)) return bad;
    if (H.curves.empty()) return violation("homotopy.curves", "no curves");
    if (H.curves.size() != H.moves.size() + 1)
        return violation("homotopy.moves", "need exactly one move between curves");
    if (H.simple) {
        if (H.anchor.kind != OuterAnchor::Kind::Face)
            return violation("homotopy.simple", "simple homotopies need a face anchor");
        if (H.anchor.u == H.anchor.v)
            return violation("homotopy.simple", "simple endpoints must be distinct");
    }
    if (H.curves.front() != Curve{H.anchor.u})
        return violation("homotopy.start", "first curve is not trivial at u", 0);
    if (H.curves.back() != Curve{H.anchor.v})
        return violation("homotopy.finish", "last curve is not trivial at v",
                         int(H.curves.size()) - 1);

    for (std::size_t i = 0; i < H.curves.size(); ++i) {
        const Curve& c = H.curves[i];
        if (c.empty()) return violation("curve.empty", "empty curve", int(i));
        for (Vertex v : c)
            if (v < 0 || v >= T.n) return violation("curve.vertex", "vertex out of range", int(i));
        for (std::size_t j = 0; j + 1 < c.size(); ++j)
            if (!T.has_edge(c[j], c[j + 1]))
                return violation("curve.walk", "consecutive vertices not adjacent", int(i));
        if (!H.anchor.on_path(H.anchor.s_path, c.front()))
            return violation("curve.start", "curve does not start on s(uv)", int(i));
        if (!H.anchor.on_path(H.anchor.t_path, c.back()))
            return violation("curve.finish", "curve does not end on t(uv)", int(i));
        if (H.simple) {
            Curve s = c;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                return violation("curve.simple", "curve repeats a vertex", int(i));
        }
    }

    std::vector<int> totals(T.faces.size(), 0);
    for (std::size_t i = 0; i < H.moves.size(); ++i) {
        std::string reason;
        auto r = apply_move(T, H.anchor, H.curves[i], H.moves[i], !H.simple, &reason);
        if (!r) return violation("move.illegal", reason, int(i));
        if (r->curve != H.curves[i + 1])
            return violation("move.replay", "move does not produce the next curve", int(i));
        for (auto [f, d] : r->flips) totals[f] += d;
    }

    if (H.simple) {
        // Condition 4: each vertex's appearances span a contiguous interval.
        std::map<Vertex, std::pair<int, int>> span;
        for (int i = 0; i < int(H.curves.size()); ++i)
            for (Vertex v : H.curves[i]) {
                auto it = span.find(v);
                if (it == span.end())
                    span[v] = {i, i};
                else
                    it->second.second = i;
            }
        for (auto& [v, se] : span)
            for (int i = se.first; i <= se.second; ++i) {
                const Curve& c = H.curves[i];
                if (std::find(c.begin(), c.end(), v) == c.end())
                    return violation("homotopy.contiguity",
                                     "vertex " + std::to_string(v) +
                                         " leaves and re-enters the curve",
                                     i);
            }
    }

    // Topological non-triviality: every face except the outer one is swept
    // exactly once (for a doubled-edge anchor all faces of T count).
    for (int fi = 0; fi < int(T.faces.size()); ++fi) {
        bool outer = H.anchor.kind == OuterAnchor::Kind::Face && fi == H.anchor.face;
        int want = outer ? 0 : 1;
        if (totals[fi] != want)
            return violation("homotopy.flip_number",
                             "face " + std::to_string(fi) + " has flipping number " +
                                 std::to_string(totals[fi]) + ", expected " +
                                 std::to_string(want),
                             fi);
    }
    return std::nullopt;
}

} // namespace heightlab
