#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "heightlab/families.hpp"
#include "heightlab/solvers.hpp"

using namespace heightlab;

TEST_CASE("simple homotopy height of K3 is 2") {
    auto r = shh_exact(make_k3());
    CHECK(r.value == 2);
    CHECK(r.optimal);
    CHECK(validate_homotopy(make_k3(), r.cert) == std::nullopt);
}

TEST_CASE("simple homotopy height of K4 is 3") {
    Triangulation T = make_k4();
    auto r = shh_exact(T);
    CHECK(r.value == 3);
    CHECK(homotopy_height(r.cert) == 3);
    CHECK(validate_homotopy(T, r.cert) == std::nullopt);
}

TEST_CASE("fig1 graph has sHh at most 4") {
    Triangulation T = fixtures::fig1_graph();
    auto r = shh_exact(T);
    CHECK(r.value <= 4);
    CHECK(validate_homotopy(T, r.cert) == std::nullopt);
}

TEST_CASE("general homotopy height: K3 and K4") {
    auto k3 = hh_exact(make_k3());
    CHECK(k3.value == 2);
    CHECK(validate_homotopy(make_k3(), k3.cert) == std::nullopt);
    auto k4 = hh_exact(make_k4());
    CHECK(k4.value == 3);
    CHECK(validate_homotopy(make_k4(), k4.cert) == std::nullopt);
}

TEST_CASE("hh <= shh on stacked fixtures") {
    for (const auto& T : enumerate_stacked_triangulations(6, 21, 4)) {
        auto s = shh_exact(T);
        auto h = hh_exact(T);
        CHECK(h.value <= s.value);
        CHECK(validate_homotopy(T, s.cert) == std::nullopt);
        CHECK(validate_homotopy(T, h.cert) == std::nullopt);
    }
}

TEST_CASE("solvers are deterministic") {
    Triangulation T = enumerate_stacked_triangulations(6, 77, 1)[0];
    auto a = shh_exact(T), b = shh_exact(T);
    CHECK(a.value == b.value);
    CHECK(a.cert.moves.size() == b.cert.moves.size());
    CHECK(a.cert.curves == b.cert.curves);
}

TEST_CASE("grid oracle: K3 infeasible at height 1, feasible at height 2") {
    Triangulation K3 = make_k3();
    auto r1 = gmh_grid_oracle(K3, 1, 6, 6);
    CHECK(r1.status == OracleResult::Status::Infeasible);
    auto r2 = gmh_grid_oracle(K3, 2, 4);
    REQUIRE(r2.status == OracleResult::Status::Feasible);
    CHECK(validate_gridrep(K3, r2.rep, false) == std::nullopt);
    CHECK(r2.rep.height == 2);
}

TEST_CASE("grid oracle: K4 infeasible at 2, feasible at 3") {
    Triangulation T = make_k4();
    auto r2 = gmh_grid_oracle(T, 2, 10, 8);
    CHECK(r2.status == OracleResult::Status::Infeasible);
    auto r3 = gmh_grid_oracle(T, 3, 10);
    REQUIRE(r3.status == OracleResult::Status::Feasible);
    CHECK(validate_gridrep(T, r3.rep, false) == std::nullopt);
}

TEST_CASE("oracle without an envelope stays inconclusive on exhaustion") {
    auto r = gmh_grid_oracle(make_k4(), 2, 4);
    CHECK(r.status == OracleResult::Status::Inconclusive);
}

TEST_CASE("verify_chain on K4 and nested triangles") {
    auto k4 = verify_chain(make_k4());
    CHECK(k4.chain_ok);
    CHECK(k4.pw == 3);
    CHECK(k4.op == 2);
    CHECK(k4.shh == 3);
    CHECK(k4.hh == 3);

    auto nt = verify_chain(nested_triangles(2));
    CHECK(nt.chain_ok);
    CHECK(nt.pw == 3);
    CHECK(2 * nt.op - 1 <= nt.hh);
}

TEST_CASE("verify_chain on a small stacked corpus") {
    for (const auto& T : enumerate_stacked_triangulations(7, 2, 3)) {
        auto r = verify_chain(T);
        if (!r.chain_ok) {
            for (auto& v : r.violations) INFO(v);
        }
        CHECK(r.chain_ok);
    }
}
