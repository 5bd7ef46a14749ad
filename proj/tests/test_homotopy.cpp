#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "heightlab/homotopy.hpp"

using namespace heightlab;

TEST_CASE("anchor paths follow the stored orientation") {
    Triangulation T = fixtures::fig1_graph();
    OuterAnchor a = make_face_anchor(T, 0, 0, 2);
    CHECK(a.t_path == std::vector<Vertex>{0, 1, 2});
    CHECK(a.s_path == std::vector<Vertex>{0, 2});
    CHECK(validate_anchor(T, a) == std::nullopt);

    OuterAnchor rev = make_face_anchor(T, 0, 2, 0);
    CHECK(rev.t_path == std::vector<Vertex>{2, 0});
    CHECK(rev.s_path == std::vector<Vertex>{2, 1, 0});
}

TEST_CASE("face flip rewrites x-y to x-z-y") {
    Triangulation T = fixtures::fig1_graph();
    Curve c{0, 1};
    int f = T.face_with(0, 1, 3);
    auto r = apply_move(T, make_face_anchor(T, 0, 0, 2), c, Move::face_flip(f, 0, Move::Dir::Grow),
                        false);
    REQUIRE(r.has_value());
    CHECK(r->curve == Curve{0, 3, 1});
    REQUIRE(r->flips.size() == 1);
    CHECK(r->flips[0] == std::pair{f, +1});
}

TEST_CASE("edge slide rewrites z-x-t to z-y-t") {
    Triangulation T = fixtures::fig1_graph();
    Curve c{0, 3, 1, 2};
    auto r = apply_move(T, make_face_anchor(T, 0, 0, 2), c, Move::edge_slide(1, 4, 2), false);
    REQUIRE(r.has_value());
    CHECK(r->curve == Curve{0, 3, 4, 2});
    CHECK(r->flips.size() == 2);
    CHECK(r->flips[0].second == +1);
    CHECK(r->flips[1].second == +1);
}

TEST_CASE("spike rewrites x to x-y-x, only outside simple mode") {
    Triangulation T = fixtures::fig1_graph();
    OuterAnchor a = make_face_anchor(T, 0, 0, 2);
    Curve c{0};
    CHECK(!apply_move(T, a, c, Move::spike(0, 3, 0), false).has_value());
    auto r = apply_move(T, a, c, Move::spike(0, 3, 0), true);
    REQUIRE(r.has_value());
    CHECK(r->curve == Curve{0, 3, 0});
    CHECK(r->flips.empty());
}

TEST_CASE("moves are invertible") {
    Triangulation T = fixtures::fig1_graph();
    Homotopy H = fixtures::fig1_homotopy(T);
    for (std::size_t i = 0; i < H.moves.size(); ++i) {
        auto fwd = apply_move(T, H.anchor, H.curves[i], H.moves[i], true);
        REQUIRE(fwd.has_value());
        auto back = apply_move(T, H.anchor, fwd->curve, inverse_move(H.moves[i]), true);
        REQUIRE(back.has_value());
        CHECK(back->curve == H.curves[i]);
    }
}

TEST_CASE("the fig1 homotopy validates at height 4 with unit flip numbers") {
    Triangulation T = fixtures::fig1_graph();
    Homotopy H = fixtures::fig1_homotopy(T);
    auto bad = validate_homotopy(T, H);
    if (bad) {
        INFO(bad->rule << " " << bad->detail << " @" << bad->index);
        CHECK(false);
    }
    CHECK(homotopy_height(H) == 4);
    auto flips = flip_numbers(T, H);
    for (int fi = 0; fi < int(T.faces.size()); ++fi)
        CHECK(flips[fi] == (fi == H.anchor.face ? 0 : 1));
}

TEST_CASE("replay mismatch is reported with index") {
    Triangulation T = fixtures::fig1_graph();
    Homotopy H = fixtures::fig1_homotopy(T);
    H.curves[3] = Curve{0, 3, 2, 1}; // wrong curve
    auto bad = validate_homotopy(T, H);
    REQUIRE(bad.has_value());
    CHECK(bad->index >= 2);
}

TEST_CASE("condition 4: a vertex may not leave and re-enter") {
    Triangulation T = fixtures::fig1_graph();
    // u=0 to v=1 around the top; vertex 1 enters, leaves, re-enters.
    Homotopy H;
    H.simple = true;
    H.anchor = make_face_anchor(T, 0, 0, 1);
    // manufactured curve list violating contiguity, moves consistent
    H.curves = {{0}, {0, 1}, {0}, {0, 1}};
    H.moves = {Move::boundary_move(0, 1, Move::End::Finish, Move::Dir::Grow),
               Move::boundary_move(0, 1, Move::End::Finish, Move::Dir::Shrink),
               Move::boundary_move(0, 1, Move::End::Finish, Move::Dir::Grow)};
    auto bad = validate_homotopy(T, H);
    REQUIRE(bad.has_value());
    // rejected for contiguity or missing sweeps, never accepted
    CHECK((bad->rule == "homotopy.contiguity" || bad->rule == "homotopy.flip_number" ||
           bad->rule == "homotopy.finish"));
}

TEST_CASE("spike then unspike alone fails the flipping numbers") {
    Triangulation T = fixtures::fig1_graph();
    Homotopy H;
    H.simple = false;
    H.anchor = make_edge_anchor(T, 0, 1, 0, 0, true);
    H.curves = {{0}, {0, 3, 0}, {0}};
    H.moves = {Move::spike(0, 3, 0), Move::unspike(0, 3, 0)};
    auto bad = validate_homotopy(T, H);
    REQUIRE(bad.has_value());
    CHECK(bad->rule == "homotopy.flip_number");
}

TEST_CASE("simple homotopies reject spikes") {
    Triangulation T = fixtures::fig1_graph();
    Homotopy H = fixtures::fig1_homotopy(T);
    H.curves = {{0}, {0, 3, 0}};
    H.curves.resize(2);
    H.moves = {Move::spike(0, 3, 0)};
    auto bad = validate_homotopy(T, H);
    REQUIRE(bad.has_value());
}

TEST_CASE("boundary moves respect their side") {
    Triangulation T = fixtures::fig1_graph();
    OuterAnchor a = make_face_anchor(T, 0, 0, 2); // s = 0-2, t = 0-1-2
    Curve c{0};
    // edge (0,1) is on t only: growing the start with it must fail
    CHECK(!apply_move(T, a, c, Move::boundary_move(0, 1, Move::End::Start, Move::Dir::Grow),
                      false)
               .has_value());
    CHECK(apply_move(T, a, c, Move::boundary_move(0, 1, Move::End::Finish, Move::Dir::Grow),
                     false)
              .has_value());
}
