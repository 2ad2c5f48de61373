#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncres/annihilators.hpp"
#include "ncres/catalog.hpp"
#include "ncres/geometry.hpp"
#include "ncres/verify.hpp"

#include <numeric>

using namespace ncres;

// The OpenMP kernels must be bit-identical to their serial references.

TEST_CASE("support scan: parallel equals serial") {
    for (auto [r, b] : std::vector<std::pair<int, int>>{
             {5, 2}, {7, 3}, {8, 5}, {9, 4}, {10, 3}, {11, 7}}) {
        auto alg = cyclic_mckay_algebra(r, b);
        auto s = scan_thin_supports(*alg, 0, Execution::serial);
        auto p = scan_thin_supports(*alg, 0, Execution::parallel);
        CHECK(s == p);
    }
    auto coni = conifold_algebra();
    CHECK(scan_thin_supports(*coni, 0, Execution::serial) ==
          scan_thin_supports(*coni, 0, Execution::parallel));
    auto su3 = abelian_su3_algebra(2);
    CHECK(scan_thin_supports(*su3, 0, Execution::serial) ==
          scan_thin_supports(*su3, 0, Execution::parallel));
}

TEST_CASE("perfect matchings: parallel equals serial") {
    auto r2 = abelian_su3_algebra(2);
    CHECK(perfect_matchings(*r2, Execution::serial) ==
          perfect_matchings(*r2, Execution::parallel));
    auto r4 = abelian_su3_algebra(4);
    CHECK(perfect_matchings(*r4, Execution::serial) ==
          perfect_matchings(*r4, Execution::parallel));
}

TEST_CASE("classification is execution-independent") {
    auto alg = cyclic_mckay_algebra(9, 7);
    auto s = classify_almost_large(*alg, 0, true, Execution::serial, false);
    auto p = classify_almost_large(*alg, 0, true, Execution::parallel, false);
    REQUIRE(s.size() == p.size());
    for (size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].support == p[i].support);
        CHECK(s[i].ell == p[i].ell);
        CHECK(s[i].moduli_dim == p[i].moduli_dim);
    }
}

TEST_CASE("verification reports are deterministic") {
    CHECK(verify_cyclic(7, 3, 0, Execution::parallel).table() ==
          verify_cyclic(7, 3, 0, Execution::serial).table());
    CHECK(verify_conifold().table() == verify_conifold().table());
    PreprojectiveCase c{false, 2, 0};
    CHECK(verify_preprojective(c).json() == verify_preprojective(c).json());
}
