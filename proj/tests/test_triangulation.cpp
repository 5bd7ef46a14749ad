#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "heightlab/triangulation.hpp"

using namespace heightlab;

TEST_CASE("K4 builds with n=4, m=6") {
    Triangulation T = make_k4();
    CHECK(T.n == 4);
    CHECK(T.edge_count() == 6);
    CHECK(T.faces.size() == 4);
}

TEST_CASE("K3 degenerate two-face triangle") {
    Triangulation T = make_k3();
    CHECK(T.n == 3);
    CHECK(T.edge_count() == 3);
    CHECK(T.faces.size() == 2);
}

TEST_CASE("quadrilateral hole is NonTriangular") {
    // Octahedron face list with two opposite faces removed leaves edges on
    // a single face side.
    std::vector<std::array<Vertex, 3>> faces = {
        {{0, 1, 2}}, {{0, 2, 3}}, {{0, 3, 4}}, {{0, 4, 1}},
        {{5, 2, 1}}, {{5, 3, 2}}, {{5, 4, 3}}};
    // full octahedron would add {5,1,4}
    CHECK_THROWS_AS(build_triangulation(faces), BuildError);
    try {
        build_triangulation(faces);
    } catch (const BuildError& e) {
        CHECK(e.code() == "NonTriangular");
    }
}

TEST_CASE("face with repeated vertex is NotSimple") {
    try {
        build_triangulation({{{0, 0, 1}}, {{0, 1, 0}}});
        CHECK(false);
    } catch (const BuildError& e) {
        CHECK(e.code() == "NotSimple");
    }
}

TEST_CASE("two disjoint tetrahedra are Disconnected") {
    std::vector<std::array<Vertex, 3>> faces = {
        {{0, 1, 2}}, {{0, 3, 1}}, {{0, 2, 3}}, {{1, 3, 2}},
        {{4, 5, 6}}, {{4, 7, 5}}, {{4, 6, 7}}, {{5, 7, 6}}};
    CHECK_THROWS_AS(build_triangulation(faces), BuildError);
}

TEST_CASE("face list orientation is repaired per triple") {
    // K4 with sloppy orientations still builds.
    Triangulation T = build_triangulation({{{0, 1, 2}}, {{0, 1, 3}}, {{0, 2, 3}}, {{1, 2, 3}}});
    CHECK(T.n == 4);
    CHECK(T.edge_count() == 6);
}

TEST_CASE("fig1 fixture embeds as expected") {
    Triangulation T = fixtures::fig1_graph();
    CHECK(T.n == 5);
    CHECK(T.edge_count() == 9);
    CHECK(T.faces.size() == 6);
    CHECK(T.has_edge(3, 4));
    CHECK(!T.has_edge(0, 4));
    CHECK(T.face_with(0, 1, 3) >= 0);
}

TEST_CASE("distance with forbidden vertices") {
    Triangulation T = make_k4();
    CHECK(*distance(T, 0, 1) == 1);
    CHECK(*distance(T, 0, 1, {2, 3}) == 1);
    CHECK_THROWS_AS(distance(T, 0, 1, {1}), BuildError);
}

TEST_CASE("stacked triangulations: counts, determinism, Euler") {
    auto one = enumerate_stacked_triangulations(4, 123, 3);
    for (const auto& T : one) {
        CHECK(T.n == 4);
        CHECK(T.edge_count() == 6);
    }
    auto a = enumerate_stacked_triangulations(6, 1, 10);
    auto b = enumerate_stacked_triangulations(6, 1, 10);
    REQUIRE(a.size() == 10);
    for (int i = 0; i < 10; ++i) {
        CHECK(a[i].edge_count() == 12);
        CHECK(a[i].content_hash() == b[i].content_hash());
        CHECK(int(a[i].faces.size()) == 2 * a[i].n - 4);
    }
    auto c = enumerate_stacked_triangulations(5, 7, 2);
    auto d = enumerate_stacked_triangulations(5, 7, 2);
    CHECK(c[0].content_hash() == d[0].content_hash());
    CHECK(c[1].content_hash() == d[1].content_hash());
}

TEST_CASE("face traversal consistency: every directed arc in one face") {
    for (const auto& T : enumerate_stacked_triangulations(8, 42, 5)) {
        std::set<std::pair<Vertex, Vertex>> arcs;
        for (const Face& f : T.faces)
            for (int j = 0; j < 3; ++j) {
                auto arc = std::pair{f.cycle[j], f.cycle[(j + 1) % 3]};
                CHECK(arcs.insert(arc).second);
                CHECK(T.face_of_arc(arc.first, arc.second) >= 0);
            }
        CHECK(int(arcs.size()) == 2 * T.edge_count());
    }
}

TEST_CASE("distance symmetry and triangle inequality on a fixed forbidden set") {
    auto Ts = enumerate_stacked_triangulations(7, 9, 3);
    for (const auto& T : Ts) {
        std::set<Vertex> forb{T.n - 1};
        for (Vertex a = 0; a < T.n - 1; ++a)
            for (Vertex b = 0; b < T.n - 1; ++b) {
                auto dab = distance(T, a, b, forb);
                auto dba = distance(T, b, a, forb);
                REQUIRE(dab.has_value());
                CHECK(*dab == *dba);
                for (Vertex c = 0; c < T.n - 1; ++c) {
                    auto dac = distance(T, a, c, forb);
                    auto dcb = distance(T, c, b, forb);
                    CHECK(*dab <= *dac + *dcb);
                }
            }
    }
}
