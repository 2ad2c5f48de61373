#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <bit>
#include <set>

#include "ncres/catalog.hpp"
#include "ncres/impression.hpp"
#include "ncres/representation.hpp"

using namespace ncres;

TEST_CASE("tautological algebra shapes") {
    CHECK_THROWS(tautological_algebra(0));
    auto a1 = tautological_algebra(1);
    CHECK(a1->quiver().num_vertices() == 2);
    CHECK(a1->quiver().num_arrows() == 2);
    CHECK(a1->relations.empty());  // a single cycle commutes with itself
    auto a3 = tautological_algebra(3);
    bool found = false;
    for (const auto& r : a3->relations)
        if (r.str() == "a1*b*a2 - a2*b*a1") found = true;
    CHECK(found);
}

TEST_CASE("tautological n=2: a generic rep is simple") {
    auto alg = tautological_algebra(2);
    ThinRep t;
    t.algebra = alg.get();
    t.values = {Rational(1), Rational(2), Rational(1)};  // a1, a2, b
    CHECK(check_relations(t.to_rep()).empty());
    CHECK(is_simple(t.to_rep()));
    CHECK(is_simple_thin(t));
}

TEST_CASE("conifold relations and impression") {
    auto alg = conifold_algebra();
    CHECK(alg->quiver().num_vertices() == 2);
    CHECK(alg->quiver().num_arrows() == 4);
    // two independent relations of each family (i != k)
    int afam = 0, bfam = 0;
    for (const auto& r : alg->relations) {
        std::string s = r.str();
        if (s.find("a1*b") == 0 || s.find("a2*b") == 0) ++afam;
        if (s.find("b1*a") == 0 || s.find("b2*a") == 0) ++bfam;
    }
    CHECK(afam == 2);
    CHECK(bfam == 2);
    CHECK(impression_satisfies_relations(*alg));
    // tau(b1 a1) at (x,y,z,w) = (1,0,1,0): the vertex-0 block value zx = 1
    Path ba = Path::from_names(alg->quiver(), {"b1", "a1"});
    Poly label = bar_tau(*alg->impression, ba);
    CHECK(label == Poly::var("z") * Poly::var("x"));
    CHECK(label.eval({{"x", Rational(1)}, {"y", Rational(0)},
                      {"z", Rational(1)}, {"w", Rational(0)}}) == Rational(1));
}

TEST_CASE("cyclic mckay algebra") {
    CHECK_THROWS(cyclic_mckay_algebra(6, 2));  // gcd != 1
    auto a21 = cyclic_mckay_algebra(2, 1);
    CHECK(a21->quiver().num_vertices() == 2);
    CHECK(a21->quiver().num_arrows() == 4);
    CHECK(a21->relations.size() == 2);
    auto a73 = cyclic_mckay_algebra(7, 3);
    // relation at i=0: b1 a0 - a3 b0, both paths 0 -> 4
    CHECK(a73->relations[0].str() == "b1*a0 - a3*b0");
    CHECK(a73->relations[0].tail() == 0);
    CHECK(a73->relations[0].head() == 4);
    CHECK(impression_satisfies_relations(*a73));
    // (n, n-1) is a doubled cycle: every b_i parallels the reversed... for
    // b = r-1 the arrows b_i: i -> i-1 reverse the a-arrows
    auto prep = cyclic_mckay_algebra(5, 4);
    const Quiver& q = prep->quiver();
    for (int i = 0; i < 5; ++i) {
        const Arrow& ai = q.arrow(q.arrow_id("a" + std::to_string(i)));
        const Arrow& bh = q.arrow(q.arrow_id("b" + std::to_string(ai.head)));
        CHECK(bh.head == ai.tail);  // b_{i+1} reverses a_i
    }
}

TEST_CASE("su3 orbifold algebra") {
    auto r4 = abelian_su3_algebra(4);
    CHECK(r4->quiver().num_vertices() == 16);
    CHECK(r4->quiver().num_arrows() == 48);
    CHECK(r4->relations.size() == 48);
    CHECK(impression_satisfies_relations(*r4));
    auto r2 = abelian_su3_algebra(2);
    CHECK(r2->quiver().num_vertices() == 4);
    CHECK(r2->quiver().num_arrows() == 12);
    CHECK(r2->relations.size() == 12);
    // every length-3 cycle c b a at a vertex has central label xyz, checked
    // as a matrix identity under tau
    const Quiver& q = r4->quiver();
    const Impression& imp = *r4->impression;
    for (int v = 0; v < 4; ++v) {
        // cycle at v: a then b then c back to v
        int up = q.arrow(q.arrow_id("a" + std::to_string(v))).head;
        int right = q.arrow(q.arrow_id("b" + std::to_string(up))).head;
        Path cyc = Path::from_names(
            q, {"c" + std::to_string(right), "b" + std::to_string(up),
                "a" + std::to_string(v)});
        CHECK(cyc.head() == v);
        CHECK(bar_tau(imp, cyc) ==
              Poly::var("x") * Poly::var("y") * Poly::var("z"));
    }
}

TEST_CASE("preprojective algebras: shapes and dimension vectors") {
    auto d5 = preprojective_D(5);  // n = 3
    CHECK(d5->quiver().num_vertices() == 6);
    CHECK(d5->quiver().num_arrows() == 10);  // five doubled edges of affine D5
    CHECK(d5->relations.size() == 6);
    CHECK(d5->expected_dimension_vector == std::vector<int>{1, 1, 2, 2, 1, 1});
    auto d4 = preprojective_D(4);
    int total = 0;
    for (int d : d4->expected_dimension_vector) total += d;
    CHECK(total == 6);  // (1,1,2,1,1)
    auto e6 = preprojective_E6();
    CHECK(e6->quiver().num_vertices() == 7);
    CHECK(e6->quiver().num_arrows() == 12);
    CHECK(e6->relations.size() == 7);
    CHECK(e6->expected_dimension_vector == std::vector<int>{1, 2, 3, 2, 2, 1, 1});
}

TEST_CASE("builtin D charts: relations vanish identically") {
    for (int npl2 : {4, 5, 6}) {
        auto alg = preprojective_D(npl2);
        auto charts = builtin_family_charts(*alg, 0);
        CHECK(int(charts.size()) == npl2);
        for (const auto& c : charts) {
            CHECK(check_relations(c.sigma).empty());
            // at (s,t) = (1,1) in particular
            RepQ at = c.at({Rational(1), Rational(1)});
            CHECK(check_relations(at).empty());
        }
    }
}

TEST_CASE("builtin E6 charts: relations vanish identically") {
    auto alg = preprojective_E6();
    auto charts = builtin_family_charts(*alg, 0);
    REQUIRE(charts.size() == 6);
    for (const auto& c : charts) {
        CHECK(check_relations(c.sigma).empty());
        RepQ at = c.at({Rational(1), Rational(1)});
        CHECK(check_relations(at).empty());
    }
    // shrink targets cover vertices 1..6
    std::set<int> bolds;
    for (const auto& c : charts) bolds.insert(c.bold_vertex);
    CHECK(bolds == std::set<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("builtin charts for the other socle choices") {
    auto d5 = preprojective_D(5);
    for (int socle : {1, 4, 5}) {
        auto charts = builtin_family_charts(*d5, socle);
        CHECK(charts.size() == 5);
        for (const auto& c : charts) {
            CHECK(c.sink == socle);
            CHECK(check_relations(c.sigma).empty());
        }
    }
    CHECK_THROWS(builtin_family_charts(*d5, 2));
    auto e6 = preprojective_E6();
    for (int socle : {5, 6}) {
        auto charts = builtin_family_charts(*e6, socle);
        CHECK(charts.size() == 6);
        for (const auto& c : charts) {
            CHECK(c.sink == socle);
            CHECK(check_relations(c.sigma).empty());
        }
    }
    CHECK_THROWS(builtin_family_charts(*e6, 1));
}

TEST_CASE("chart socles are 1-dimensional at the socle vertex") {
    auto e6 = preprojective_E6();
    for (const auto& c : builtin_family_charts(*e6, 0)) {
        auto soc = socle_top_symbolic(c.sigma);
        REQUIRE(soc.socle.size() == 1);
        CHECK(soc.socle.count(0) == 1);
        CHECK(soc.socle.at(0) == 1);
    }
    auto d5 = preprojective_D(5);
    for (const auto& c : builtin_family_charts(*d5, 0)) {
        auto soc = socle_top_symbolic(c.sigma);
        REQUIRE(soc.socle.size() == 1);
        CHECK(soc.socle.at(0) == 1);
    }
}

TEST_CASE("a flipped sign breaks the preprojective relations") {
    auto d5 = preprojective_D(5);
    auto charts = builtin_family_charts(*d5, 0);
    // some constant entry participates in a cancellation, so flipping it must
    // leave a nonzero relation residue
    bool some_flip_breaks = false;
    for (size_t a = 0; a < charts[1].sigma.mats.size() && !some_flip_breaks; ++a) {
        const MatP& m = charts[1].sigma.mats[a];
        for (int i = 0; i < m.rows() && !some_flip_breaks; ++i)
            for (int j = 0; j < m.cols() && !some_flip_breaks; ++j) {
                if (!m(i, j).is_constant() || m(i, j).is_zero()) continue;
                FamilyChart c = charts[1];
                c.sigma.mats[a](i, j) *= Rational(-1);
                if (!check_relations(c.sigma).empty()) some_flip_breaks = true;
            }
    }
    CHECK(some_flip_breaks);
}

TEST_CASE("su3 figure data is consistent") {
    const auto& charts = su3_figure_charts();
    CHECK(charts.size() == 15);
    for (const auto& c : charts) {
        CHECK(std::popcount(c.support_mask) == 32);
        // labels partition into subsets of the support
        for (size_t l = 1; l < c.label_masks.size(); ++l)
            CHECK((c.label_masks[l] & ~c.support_mask) == 0);
    }
    CHECK(su3_figure_chart("e1").bold_vertices.size() == 2);
    CHECK_THROWS(su3_figure_chart("zz"));
}

TEST_CASE("catalog registry round trip") {
    for (const auto& name : {"conifold", "cyclic(7,3)", "su3(2)", "D(5)", "E6",
                             "tautological(3)"}) {
        auto alg = catalog_build(name);
        CHECK(alg->quiver().num_vertices() > 0);
    }
    CHECK_THROWS(catalog_build("nope"));
}
