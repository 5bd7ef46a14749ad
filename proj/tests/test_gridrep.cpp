#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "heightlab/contact.hpp"
#include "heightlab/gridrep.hpp"

using namespace heightlab;

TEST_CASE("fig1 grid rep validates simple at height 4") {
    Triangulation T = fixtures::fig1_graph();
    GridRep R = fixtures::fig1_gridrep();
    auto bad = validate_gridrep(T, R, true);
    if (bad) {
        INFO(bad->rule << " " << bad->detail);
        CHECK(false);
    }
    CHECK(R.height == 4);
}

TEST_CASE("single-cell mutations are caught by the right condition") {
    Triangulation T = fixtures::fig1_graph();
    GridRep R = fixtures::fig1_gridrep();

    SUBCASE("an unrealized required edge breaks condition 3 exactness") {
        // validate against a graph id map where (3,4) is not an edge: the
        // grid contact between 3 and 4 is then a non-adjacency
        std::vector<std::pair<Vertex, Vertex>> edges = T.edges();
        std::erase(edges, std::pair<Vertex, Vertex>{3, 4});
        auto bad = validate_gridrep_edges(T.n, edges, R, false, /*exact=*/true);
        REQUIRE(bad.has_value());
        CHECK(bad->rule == "gridrep.exactness");
    }
    SUBCASE("column gap breaks simplicity") {
        R.labels[3][1] = 0; // column 1 becomes 0,0,1,0 but 0 stays connected
        REQUIRE(validate_gridrep(T, R, false) == std::nullopt);
        auto bad = validate_gridrep(T, R, true);
        REQUIRE(bad.has_value());
        CHECK(bad->rule == "gridrep.simple");
    }
    SUBCASE("erasing a vertex breaks condition 1") {
        R.labels[2][4] = 2; // the only cell of 4
        auto bad = validate_gridrep(T, R, false);
        REQUIRE(bad.has_value());
        CHECK(bad->rule == "gridrep.cond1");
    }
    SUBCASE("splitting a class breaks condition 2") {
        R.labels[1][4] = 0; // 3's row-1 run falls apart around column 4
        auto bad = validate_gridrep(T, R, false);
        REQUIRE(bad.has_value());
        CHECK(bad->rule == "gridrep.cond2");
    }
}

TEST_CASE("2x2 K3 rep: three polygons, contact graph K3") {
    GridRep R = make_gridrep({{0, 1}, {2, 2}});
    Triangulation K3 = make_k3();
    CHECK(validate_gridrep(K3, R, true) == std::nullopt);
    ContactRep C = to_contact(R, 3);
    int nonempty = 0;
    for (const auto& p : C.polygons) nonempty += !p.empty();
    CHECK(nonempty == 3);
    CHECK(C.four_side_points.empty());
}

TEST_CASE("1x2 rep: two unit squares sharing a side") {
    GridRep R = make_gridrep({{0, 1}});
    ContactRep C = to_contact(R, 2);
    CHECK(C.polygons[0].size() == 1);
    CHECK(C.polygons[1].size() == 1);
    CHECK(C.sides.size() >= 1);
    for (const auto& j : C.junctions) CHECK(j.exterior);
    CHECK(C.junctions.size() == 2); // the two ends of the shared side
}

TEST_CASE("junction classification on the fig1 rep") {
    ContactRep C = to_contact(fixtures::fig1_gridrep(), 5);
    CHECK(C.four_side_points.empty());
    // every interior junction is a lattice point on three sides
    for (const auto& j : C.junctions) {
        auto [v, h] = point_germs(C.grid, j.r, j.c);
        CHECK(v + h == 3);
        CHECK(j.horizontal == (h >= 2));
    }
    CHECK(validate_contact(C, true) == std::nullopt);
}

TEST_CASE("normalization removes interior vertical junctions") {
    // fig1 rep with column 6 edited so the 5|6 seam has a vertical junction.
    Triangulation T = fixtures::fig1_graph();
    GridRep R = fixtures::fig1_gridrep();
    R.labels[2][6] = 0;
    REQUIRE(validate_gridrep(T, R, true) == std::nullopt);
    ContactRep C = to_contact(R, 5);
    int vertical = 0;
    for (const auto& j : C.junctions)
        if (!j.exterior && !j.horizontal) ++vertical;
    REQUIRE(vertical >= 1);
    auto res = normalize_contact(C, NormalizeMode::Simple);
    for (const auto& j : res.rep.junctions)
        CHECK((j.exterior || j.horizontal));
    CHECK(res.rep.height() == 4);
    CHECK(validate_gridrep(T, res.rep.grid, true) == std::nullopt);
}

TEST_CASE("normalization output pins single distinct side vertices") {
    Triangulation T = fixtures::fig1_graph();
    ContactRep C = to_contact(fixtures::fig1_gridrep(), 5);
    auto res = normalize_contact(C, NormalizeMode::Simple);
    const GridRep& G = res.rep.grid;
    for (int r = 0; r < G.height; ++r) {
        CHECK(G.labels[r][0] == G.labels[0][0]);
        CHECK(G.labels[r][G.width - 1] == G.labels[0][G.width - 1]);
    }
    CHECK(G.labels[0][0] != G.labels[0][G.width - 1]);
    CHECK(G.height == 4);
    CHECK(validate_gridrep(T, G, true) == std::nullopt);
    // claim 2: at most one vertical side per interior seam
    for (int c = 1; c < G.width; ++c)
        CHECK(seam_sides(G, c).size() <= 1);
}

TEST_CASE("normalizing an already-normal rep is the identity") {
    Triangulation T = make_k4();
    GridRep R = make_gridrep({{0, 0, 0, 0, 0, 2},
                              {0, 1, 3, 3, 2, 2},
                              {0, 1, 1, 2, 2, 2}});
    REQUIRE(validate_gridrep(T, R, true) == std::nullopt);
    auto res = normalize_contact(to_contact(R, 4), NormalizeMode::Simple);
    CHECK(res.steps.empty());
    CHECK(res.rep.grid.labels == R.labels);
}

TEST_CASE("fuzz: single-cell relabelings are valid or rejected, never crash") {
    Triangulation T = fixtures::fig1_graph();
    GridRep R0 = fixtures::fig1_gridrep();
    std::mt19937_64 rng(2024);
    int rejected = 0, accepted = 0;
    for (int it = 0; it < 500; ++it) {
        GridRep R = R0;
        int r = int(rng() % R.height), c = int(rng() % R.width);
        R.labels[r][c] = Vertex(rng() % T.n);
        auto bad = validate_gridrep(T, R, true);
        if (bad) {
            ++rejected;
            CHECK(!bad->rule.empty());
        } else {
            ++accepted;
        }
    }
    CHECK(rejected + accepted == 500);
    CHECK(rejected > 0);
}
