#ifndef HEIGHTLAB_HOMOTOPY_HPP
#define HEIGHTLAB_HOMOTOPY_HPP

#include <array>
#include <string>
#include <vector>

#include "heightlab/common.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab {

/// A walk in the triangulation, listed from the start (s-side) to the end
/// (t-side).
using Curve = std::vector<Vertex>;

/// Where a homotopy is anchored: either an outer face {u,v,w}, or an outer
/// edge (u,v) that is conceptually doubled into a two-sided lens. s_path and
/// t_path are the two u-v subpaths of the outer boundary; curves start on
/// s_path and end on t_path. The convention ties t_path to the stored face
/// orientation: the outer boundary reads u, t(uv), v, s(vu) in the direction
/// of the stored cycle.
struct OuterAnchor {
    enum class Kind { Face, Edge };
    Kind kind = Kind::Face;
    int face = -1;                 // Kind::Face
    std::array<Vertex, 2> edge{};  // Kind::Edge
    Vertex u = -1, v = -1;
    std::vector<Vertex> s_path, t_path;

    bool on_path(const std::vector<Vertex>& path, Vertex x) const {
        for (Vertex p : path)
            if (p == x) return true;
        return false;
    }
    bool path_has_edge(const std::vector<Vertex>& path, Vertex a, Vertex b) const {
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if ((path[i] == a && path[i + 1] == b) || (path[i] == b && path[i + 1] == a))
                return true;
        return false;
    }
};

/// Derive the face anchor for endpoints (u, v) on face `face`. For u == v,
/// `trivial_s` selects which side is the trivial single-vertex path.
OuterAnchor make_face_anchor(const Triangulation& T, int face, Vertex u, Vertex v,
                             bool trivial_s = true);
/// Derive the edge anchor on edge (a, b) with endpoints (u, v) in {a, b}.
OuterAnchor make_edge_anchor(const Triangulation& T, Vertex a, Vertex b, Vertex u,
                             Vertex v, bool trivial_s = true);
/// Checks an anchor against T (paths consistent with the stored embedding).
Check validate_anchor(const Triangulation& T, const OuterAnchor& anchor);

struct Move {
    enum class Kind { FaceFlip, EdgeSlide, BoundaryMove, BoundaryEdgeSlide, Spike, Unspike };
    enum class End { Start, Finish };
    enum class Dir { Grow, Shrink };

    Kind kind;
    int face = -1;                // FaceFlip: the flipped face index
    std::array<Vertex, 2> edge{}; // EdgeSlide/BoundaryMove/BES/Spike/Unspike
    int pos = -1;                 // position in the pre-move curve
    End end = End::Start;         // BoundaryMove / BES
    Dir dir = Dir::Grow;          // FaceFlip / BoundaryMove

    static Move face_flip(int face, int pos, Dir dir) {
        Move m;
        m.kind = Kind::FaceFlip;
        m.face = face;
        m.pos = pos;
        m.dir = dir;
        return m;
    }
    static Move edge_slide(Vertex from, Vertex to, int pos) {
        Move m;
        m.kind = Kind::EdgeSlide;
        m.edge = {from, to};
        m.pos = pos;
        return m;
    }
    static Move boundary_move(Vertex x, Vertex y, End end, Dir dir) {
        Move m;
        m.kind = Kind::BoundaryMove;
        m.edge = {x, y};
        m.end = end;
        m.dir = dir;
        return m;
    }
    static Move boundary_edge_slide(Vertex from, Vertex to, End end) {
        Move m;
        m.kind = Kind::BoundaryEdgeSlide;
        m.edge = {from, to};
        m.end = end;
        return m;
    }
    static Move spike(Vertex x, Vertex y, int pos) {
        Move m;
        m.kind = Kind::Spike;
        m.edge = {x, y};
        m.pos = pos;
        return m;
    }
    static Move unspike(Vertex x, Vertex y, int pos) {
        Move m;
        m.kind = Kind::Unspike;
        m.edge = {x, y};
        m.pos = pos;
        return m;
    }
};

/// Signed face flips performed by one move: (face index, +1/-1).
/// A flip is positive when the face lies to the right of the curve at the
/// move site, i.e. when the stored face cycle contains the reversed sub-arc.
struct MoveOutcome {
    Curve curve;
    std::vector<std::pair<int, int>> flips;
};

/// Applies `m` to `c`, or reports why the move is illegal at its position.
/// `allow_spikes` gates the two non-simple moves.
std::optional<MoveOutcome> apply_move(const Triangulation& T, const OuterAnchor& anchor,
                                      const Curve& c, const Move& m, bool allow_spikes,
                                      std::string* why = nullptr);

/// The inverse move (applying it to the post-move curve restores the input).
Move inverse_move(const Move& m);

struct Homotopy {
    OuterAnchor anchor;
    std::vector<Curve> curves;
    std::vector<Move> moves;
    bool simple = true;
};

/// Max number of vertices on any curve.
int homotopy_height(const Homotopy& H);

/// Full validation: anchor, endpoint conditions, move replay, per-curve walk
/// checks, simplicity conditions (when H.simple) and algebraic flipping
/// numbers (every inner face must total exactly +1).
Check validate_homotopy(const Triangulation& T, const Homotopy& H);

/// Flip totals per face after replaying all moves (indexed by face id).
std::vector<int> flip_numbers(const Triangulation& T, const Homotopy& H);

} // namespace heightlab

#endif
