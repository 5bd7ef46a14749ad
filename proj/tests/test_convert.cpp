#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "heightlab/convert.hpp"
#include "heightlab/families.hpp"
#include "heightlab/solvers.hpp"

using namespace heightlab;

TEST_CASE("fig1 homotopy converts to a simple height-4 grid rep") {
    Triangulation T = fixtures::fig1_graph();
    Homotopy H = fixtures::fig1_homotopy(T);
    auto [R, trace] = homotopy_to_gridrep(T, H);
    CHECK(R.height == 4);
    auto bad = validate_gridrep(T, R, true);
    if (bad) {
        INFO(bad->rule << " " << bad->detail);
        CHECK(false);
    }
    CHECK(trace.move_columns.size() == H.moves.size());
    // column/curve correspondence: each move's last column deduplicates to
    // the post-move curve
    for (const auto& mc : trace.move_columns)
        CHECK(R.column_dedup(mc.last_column) == H.curves[mc.move_index + 1]);
    // width envelope
    CHECK(R.width <= int(H.moves.size()) * (2 * 4 + 2) + 1);
}

TEST_CASE("an edge slide adds one column with one label change") {
    Triangulation T = fixtures::fig1_graph();
    Homotopy H = fixtures::fig1_homotopy(T);
    auto [R, trace] = homotopy_to_gridrep(T, H);
    const auto& mc = trace.move_columns[3]; // the edge-slide step
    CHECK(H.moves[3].kind == Move::Kind::EdgeSlide);
    CHECK(mc.first_column == mc.last_column);
    int diffs = 0;
    for (int r = 0; r < R.height; ++r)
        if (R.labels[r][mc.last_column] != R.labels[r][mc.last_column - 1]) ++diffs;
    CHECK(diffs == 1);
}

TEST_CASE("fig1 grid rep extracts a simple homotopy of height <= 4") {
    Triangulation T = fixtures::fig1_graph();
    auto [H, trace] = gridrep_to_homotopy(T, fixtures::fig1_gridrep());
    CHECK(H.simple);
    CHECK(homotopy_height(H) <= 4);
    CHECK(validate_homotopy(T, H) == std::nullopt);
}

TEST_CASE("round trip at the optimum pins sHh = sGMh on K4") {
    Triangulation T = make_k4();
    auto r = shh_exact(T);
    REQUIRE(r.value == 3);
    auto [R, t1] = homotopy_to_gridrep(T, r.cert);
    CHECK(R.height == 3);
    CHECK(validate_gridrep(T, R, true) == std::nullopt);
    auto [H2, t2] = gridrep_to_homotopy(T, R);
    CHECK(homotopy_height(H2) <= 3);
    CHECK(validate_homotopy(T, H2) == std::nullopt);
}

TEST_CASE("general-mode round trip on stacked fixtures") {
    for (const auto& T : enumerate_stacked_triangulations(5, 31, 3)) {
        auto r = hh_exact(T);
        auto [R, t1] = homotopy_to_gridrep(T, r.cert);
        CHECK(R.height == r.value);
        CHECK(validate_gridrep(T, R, false) == std::nullopt);
        auto [H2, t2] = gridrep_to_homotopy(T, R);
        CHECK(homotopy_height(H2) <= r.value);
        CHECK(validate_homotopy(T, H2) == std::nullopt);
    }
}

TEST_CASE("conversion traces replay deterministically") {
    Triangulation T = fixtures::fig1_graph();
    Homotopy H = fixtures::fig1_homotopy(T);
    auto [R1, tr1] = homotopy_to_gridrep(T, H);
    auto [R2, tr2] = homotopy_to_gridrep(T, H);
    CHECK(R1.labels == R2.labels);
    REQUIRE(tr1.move_columns.size() == tr2.move_columns.size());
    for (std::size_t i = 0; i < tr1.move_columns.size(); ++i) {
        CHECK(tr1.move_columns[i].first_column == tr2.move_columns[i].first_column);
        CHECK(tr1.move_columns[i].last_column == tr2.move_columns[i].last_column);
    }
}

TEST_CASE("non-monotone homotopies are refused by the grid construction") {
    Triangulation T = fixtures::fig1_graph();
    Homotopy H;
    H.simple = false;
    H.anchor = make_edge_anchor(T, 0, 1, 0, 0, true);
    H.curves = {{0}, {0, 3, 0}, {0}};
    H.moves = {Move::spike(0, 3, 0), Move::unspike(0, 3, 0)};
    CHECK_THROWS_AS(homotopy_to_gridrep(T, H), BuildError);
}
