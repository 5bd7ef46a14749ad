#ifndef HEIGHTLAB_TEST_FIXTURES_HPP
#define HEIGHTLAB_TEST_FIXTURES_HPP

#include "heightlab/gridrep.hpp"
#include "heightlab/homotopy.hpp"
#include "heightlab/triangulation.hpp"

namespace heightlab::fixtures {

// Five-vertex triangulation with outer triangle {u,v,w} = {0,1,2} and two
// interior vertices x=3 (adjacent to everything) and y=4 (adjacent to v,w,x).
// The face list is oriented; face 0 is the outer triangle.
inline Triangulation fig1_graph() {
    return build_triangulation({{{0, 1, 2}},    // u v w (outer)
                                {{1, 0, 3}},    // v u x
                                {{1, 3, 4}},    // v x y
                                {{2, 1, 4}},    // w v y
                                {{4, 3, 2}},    // y x w
                                {{0, 2, 3}}},   // u w x
                               0);
}

// A height-4 simple homotopy on fig1_graph from u=0 to w=2, realizing the
// documented move sequence: boundary-move, face-flip {u,v,x},
// boundary-move, edge-slide (v,y), face-flip {x,y,w}, face-flip {u,x,w},
// boundary-move.
inline Homotopy fig1_homotopy(const Triangulation& T) {
    Homotopy H;
    H.simple = true;
    H.anchor = make_face_anchor(T, 0, 0, 2);
    H.curves = {{0},       {0, 1},    {0, 3, 1}, {0, 3, 1, 2},
                {0, 3, 4, 2}, {0, 3, 2}, {0, 2},    {2}};
    H.moves = {
        Move::boundary_move(0, 1, Move::End::Finish, Move::Dir::Grow),
        Move::face_flip(T.face_with(0, 1, 3), 0, Move::Dir::Grow),
        Move::boundary_move(1, 2, Move::End::Finish, Move::Dir::Grow),
        Move::edge_slide(1, 4, 2),
        Move::face_flip(T.face_with(3, 2, 4), 1, Move::Dir::Shrink),
        Move::face_flip(T.face_with(0, 2, 3), 0, Move::Dir::Shrink),
        Move::boundary_move(2, 0, Move::End::Start, Move::Dir::Shrink),
    };
    return H;
}

// Hand-checked simple grid-major representation of fig1_graph, height 4
// (the columns follow fig1_homotopy's curves).
inline GridRep fig1_gridrep() {
    return make_gridrep({{0, 0, 0, 0, 0, 0, 0, 2},
                         {0, 0, 3, 3, 3, 3, 0, 2},
                         {0, 1, 1, 1, 4, 2, 2, 2},
                         {0, 1, 1, 2, 2, 2, 2, 2}});
}

} // namespace heightlab::fixtures

#endif
