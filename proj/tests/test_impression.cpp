#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncres/annihilators.hpp"
#include "ncres/catalog.hpp"
#include "ncres/impression.hpp"

#include <set>

using namespace ncres;

TEST_CASE("bar_tau on paths") {
    auto cyc = cyclic_mckay_algebra(7, 2);
    const Impression& imp = *cyc->impression;
    Poly x = Poly::var("x"), y = Poly::var("y");
    CHECK(bar_tau(imp, Path::from_names(cyc->quiver(), {"a1", "a0"})) == x * x);
    CHECK(bar_tau(imp, Path(&cyc->quiver(), 3)) == Poly(Rational(1)));
    auto coni = conifold_algebra();
    CHECK(bar_tau(*coni->impression,
                  Path::from_names(coni->quiver(), {"b1", "a1"})) ==
          Poly::var("z") * Poly::var("x"));
    (void)y;
}

TEST_CASE("bar_tau is multiplicative on all short composable pairs") {
    for (auto alg : {conifold_algebra(), cyclic_mckay_algebra(5, 3),
                     tautological_algebra(3)}) {
        const Impression& imp = *alg->impression;
        auto paths = enumerate_paths(alg->quiver(), {}, {}, 4);
        for (const auto& p : paths)
            for (const auto& q : paths) {
                if (p.tail() != q.head()) continue;
                if (p.length() + q.length() > 4) continue;
                CHECK(bar_tau(imp, compose(p, q)) ==
                      bar_tau(imp, p) * bar_tau(imp, q));
            }
    }
}

TEST_CASE("impressions satisfy relations and induce large modules") {
    for (auto alg : {conifold_algebra(), cyclic_mckay_algebra(7, 3),
                     abelian_su3_algebra(3), tautological_algebra(4)}) {
        CHECK(impression_satisfies_relations(*alg));
        // evaluation at a generic point gives a simple module
        ThinRep t;
        t.algebra = alg.get();
        t.values.assign(size_t(alg->quiver().num_arrows()), Rational(0));
        std::map<std::string, Rational> pt;
        long long prime = 2;
        for (const auto& v : alg->impression->b_vars) pt[v] = Rational(prime++);
        for (int a = 0; a < alg->quiver().num_arrows(); ++a)
            t.values[size_t(a)] = alg->impression->label(a).eval(pt);
        CHECK(check_relations(t.to_rep()).empty());
        CHECK(is_simple_thin(t));
    }
}

TEST_CASE("conifold center generators at length 2") {
    auto alg = conifold_algebra();
    auto gens = center_generators(*alg, 2);
    std::set<std::string> names;
    for (const auto& g : gens) names.insert(g.str());
    CHECK(names == std::set<std::string>{"x*z", "w*x", "y*z", "w*y"});
    // s v - t u = (xz)(yw) - (xw)(yz) = 0 under substitution
    Poly s = Poly::var("x") * Poly::var("z"), tt = Poly::var("x") * Poly::var("w");
    Poly u = Poly::var("y") * Poly::var("z"), v = Poly::var("y") * Poly::var("w");
    CHECK((s * v - tt * u).is_zero());
}

TEST_CASE("cyclic center generators are the invariant monomials") {
    for (auto [r, b] : std::vector<std::pair<int, int>>{{3, 1}, {4, 3}, {5, 2}}) {
        auto alg = cyclic_mckay_algebra(r, b);
        int max_len = r + 1;
        auto gens = center_generators(*alg, max_len);
        // oracle: invariant monomials x^i y^j with i + j*b = 0 mod r, reduced
        // to a generating set
        std::set<std::pair<int, int>> inv;
        for (int i = 0; i <= max_len; ++i)
            for (int j = 0; j + i <= max_len; ++j) {
                if (i + j == 0) continue;
                if ((i + j * b) % r == 0) inv.insert({i, j});
            }
        // every generator is invariant
        for (const auto& g : gens) {
            REQUIRE(g.num_terms() == 1);
            int di = 0, dj = 0;
            const auto& [e, c] = *g.terms().begin();
            for (size_t k = 0; k < g.vars().size(); ++k) {
                if (g.vars()[k] == "x") di = e[k];
                if (g.vars()[k] == "y") dj = e[k];
            }
            CHECK(inv.count({di, dj}) == 1);
        }
        // and the generators generate every invariant monomial in range
        std::set<std::pair<int, int>> gen_exps;
        for (const auto& g : gens) {
            const auto& [e, c] = *g.terms().begin();
            int di = 0, dj = 0;
            for (size_t k = 0; k < g.vars().size(); ++k) {
                if (g.vars()[k] == "x") di = e[k];
                if (g.vars()[k] == "y") dj = e[k];
            }
            gen_exps.insert({di, dj});
        }
        std::set<std::pair<int, int>> span = {{0, 0}};
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto [i, j] : std::set<std::pair<int, int>>(span))
                for (auto [gi, gj] : gen_exps)
                    if (i + gi <= max_len && j + gj <= max_len &&
                        i + gi + j + gj <= max_len)
                        if (span.insert({i + gi, j + gj}).second) grew = true;
        }
        for (auto p : inv)
            if (p.first + p.second <= max_len) CHECK(span.count(p) == 1);
    }
}

TEST_CASE("su3 center contains xyz at length 3") {
    auto alg = abelian_su3_algebra(4);
    auto gens = center_generators(*alg, 3);
    bool found = false;
    for (const auto& g : gens)
        if (g == Poly::var("x") * Poly::var("y") * Poly::var("z")) found = true;
    CHECK(found);
}

TEST_CASE("family coordinates for cyclic charts") {
    auto alg = cyclic_mckay_algebra(7, 5);
    for (const auto& t : cyclic_supports(*alg, 0)) {
        FamilyChart chart = trivialize_support(*alg, t.q_m_tilde, 0);
        chart.generating_paths = {t.p_path, t.q_path};
        auto coords = family_coordinates(*alg, chart);
        REQUIRE(coords.size() == 2);
        CHECK(coords[0] == Poly::var("x").pow(t.m));
        CHECK(coords[1] == Poly::var("y").pow(t.n));
        // lattice membership: m = n*b mod r
        CHECK((t.n * 5) % 7 == t.m);
    }
    // figure row (7,5): Qt^5 has coordinates (x^5 : y)
    for (const auto& t : cyclic_supports(*alg, 0))
        if (t.m == 5) CHECK(t.n == 1);
    // figure row (7,4): Qt^1 has coordinates (x : y^2)
    auto alg74 = cyclic_mckay_algebra(7, 4);
    for (const auto& t : cyclic_supports(*alg74, 0))
        if (t.m == 1) CHECK(t.n == 2);
}
