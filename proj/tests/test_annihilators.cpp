#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncres/annihilators.hpp"
#include "ncres/catalog.hpp"
#include "ncres/geometry.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace ncres;

namespace {

ThinRep thin(const QuiverAlgebra& alg, std::map<std::string, Rational> vals) {
    ThinRep t;
    t.algebra = &alg;
    t.values.assign(size_t(alg.quiver().num_arrows()), Rational(0));
    for (auto& [name, v] : vals) t.values[size_t(alg.quiver().arrow_id(name))] = v;
    return t;
}

} // namespace

TEST_CASE("p-annihilator of a large conifold module is empty") {
    auto alg = conifold_algebra();
    ThinRep t = thin(*alg, {{"a1", Rational(1)}, {"a2", Rational(1)},
                            {"b1", Rational(1)}, {"b2", Rational(1)}});
    auto v = p_annihilator(t);
    CHECK(v.mode == PAnnihilatorView::Mode::thin_exact);
    // no nonzero path is annihilated: every path stays in the full support
    for (const auto& p : enumerate_paths(alg->quiver(), {}, {}, 4))
        CHECK(path_in_subquiver(p, v.support));
}

TEST_CASE("annihilated paths of the z=w=0 module pass through the b arrows") {
    auto alg = conifold_algebra();
    ThinRep t = thin(*alg, {{"a1", Rational(1)}, {"a2", Rational(2)}});
    auto v = p_annihilator(t);
    for (const auto& p : enumerate_paths(alg->quiver(), {}, {}, 4)) {
        bool uses_b = false;
        for (int a : p.arrows())
            uses_b = uses_b || alg->quiver().arrow(a).name[0] == 'b';
        CHECK(path_in_subquiver(p, v.support) == !uses_b);
    }
}

TEST_CASE("multiplicative closure of annihilated path sets") {
    auto alg = cyclic_mckay_algebra(5, 2);
    auto triples = cyclic_supports(*alg, 0);
    REQUIRE(!triples.empty());
    ThinRep t = ThinRep::all_ones(*alg, triples[0].q_m_tilde);
    auto view = p_annihilator(t);
    auto paths = enumerate_paths(alg->quiver(), {}, {}, 3);
    for (const auto& p : paths)
        for (const auto& r : paths) {
            if (p.tail() != r.head()) continue;
            bool p_ann = !path_in_subquiver(p, view.support);
            bool pr_ann = !path_in_subquiver(compose(p, r), view.support);
            if (p_ann) CHECK(pr_ann);
        }
}

TEST_CASE("compare_annihilators on the conifold chain") {
    auto alg = conifold_algebra();
    auto a1 = p_annihilator(thin(*alg, {{"a1", Rational(1)}, {"a2", Rational(1)},
                                        {"b2", Rational(1)}}));
    auto a2 = p_annihilator(thin(*alg, {{"a1", Rational(1)}, {"a2", Rational(1)}}));
    auto a3 = p_annihilator(thin(*alg, {{"a2", Rational(1)}}));
    CHECK(compare_annihilators(a1, a1) == AnnOrder::equal);
    CHECK(compare_annihilators(a1, a2) == AnnOrder::strictly_contained);
    CHECK(compare_annihilators(a2, a3) == AnnOrder::strictly_contained);
    CHECK(compare_annihilators(a3, a1) == AnnOrder::strictly_contains);
}

TEST_CASE("incomparable annihilators for cyclic(7,2)") {
    auto alg = cyclic_mckay_algebra(7, 2);
    auto triples = cyclic_supports(*alg, 0);
    REQUIRE(triples.size() == 2);
    auto v1 = p_annihilator(ThinRep::all_ones(*alg, triples[0].q_m_tilde));
    auto v2 = p_annihilator(ThinRep::all_ones(*alg, triples[1].q_m_tilde));
    CHECK(compare_annihilators(v1, v2) == AnnOrder::incomparable);
}

TEST_CASE("bounded mode for block representations") {
    auto d4 = preprojective_D(4);
    auto charts = builtin_family_charts(*d4, 0);
    RepQ at = charts[0].at({Rational(2), Rational(3)});
    auto v = p_annihilator(at);
    CHECK(v.mode == PAnnihilatorView::Mode::bounded);
    CHECK(v.bound == at.total_dim());
    CHECK(v.bound_caveat);
    CHECK(!v.annihilated.empty());
    auto w = p_annihilator(charts[1].at({Rational(2), Rational(3)}));
    CHECK_THROWS(compare_annihilators(v, p_annihilator(at, 3)));  // bound mismatch
    (void)w;
}

TEST_CASE("cyclic_supports matches the staircase and the figure row (7,5)") {
    auto alg = cyclic_mckay_algebra(7, 5);
    auto triples = cyclic_supports(*alg, 0);
    REQUIRE(triples.size() == 3);
    std::set<std::pair<int, int>> pts;
    for (const auto& t : triples) pts.insert({t.n, t.m});
    CHECK(pts == std::set<std::pair<int, int>>{{1, 5}, {2, 3}, {3, 1}});
    auto hj = hj_continued_fraction(7, 5);
    CHECK(hj.cf.size() == 3);
}

TEST_CASE("gluing of consecutive l=2 supports") {
    for (auto [r, b] : std::vector<std::pair<int, int>>{
             {7, 2}, {7, 3}, {7, 5}, {7, 6}, {11, 4}, {12, 5}}) {
        auto alg = cyclic_mckay_algebra(r, b);
        auto triples = cyclic_supports(*alg, 0);
        std::sort(triples.begin(), triples.end(),
                  [](const auto& a, const auto& b2) { return a.m < b2.m; });
        for (size_t i = 0; i + 1 < triples.size(); ++i)
            CHECK(triples[i].q_m_b == triples[i + 1].q_m_a);
    }
}

TEST_CASE("exhaustive scan equals the lattice construction for small r") {
    for (int r = 2; r <= 9; ++r)
        for (int b = 1; b < r; ++b) {
            if (std::gcd(r, b) != 1) continue;
            auto alg = cyclic_mckay_algebra(r, b);
            auto records =
                classify_almost_large(*alg, 0, true, Execution::serial, false);
            auto triples = cyclic_supports(*alg, 0);
            std::set<std::uint64_t> got1, got2, want1, want2;
            for (const auto& rec : records) {
                CHECK(rec.chain_length_unique);
                if (rec.ell == 1) got1.insert(rec.support.mask());
                if (rec.ell == 2) got2.insert(rec.support.mask());
            }
            for (const auto& t : triples) {
                want1.insert(t.q_m_tilde.mask());
                want2.insert(t.q_m_a.mask());
                want2.insert(t.q_m_b.mask());
            }
            CHECK(got1 == want1);
            CHECK(got2 == want2);
            CHECK(records.size() == got1.size() + got2.size());
        }
}

TEST_CASE("witness chains are strictly increasing with valid witnesses") {
    auto alg = cyclic_mckay_algebra(7, 3);
    auto records = classify_almost_large(*alg, 0, true, Execution::serial, false);
    for (const auto& rec : records) {
        REQUIRE(int(rec.chain.size()) == rec.ell);
        std::uint64_t prev = Subquiver::full(alg->quiver()).mask();
        for (const auto& step : rec.chain) {
            CHECK((step.support.mask() & ~prev) == 0);
            CHECK(step.support.mask() != prev);
            // the witness path is annihilated at this step but not above
            CHECK_FALSE(path_in_subquiver(step.witness, step.support));
            CHECK(path_in_subquiver(step.witness, Subquiver(&alg->quiver(), prev)));
            prev = step.support.mask();
        }
        CHECK(prev == rec.support.mask());
    }
}

TEST_CASE("conifold classification: l=2 family plus two l=3 endpoints") {
    auto alg = conifold_algebra();
    auto records = classify_almost_large(*alg, 1, true, Execution::serial, false);
    REQUIRE(records.size() == 3);
    int fam = 0, ends = 0;
    for (const auto& rec : records) {
        if (rec.moduli_dim == 1) {
            CHECK(rec.ell == 2);
            ++fam;
        } else {
            CHECK(rec.ell == 3);
            CHECK(rec.moduli_dim == 0);
            ++ends;
        }
    }
    CHECK(fam == 1);
    CHECK(ends == 2);
}

TEST_CASE("su3 r=2 classification agrees with the matching route") {
    auto alg = abelian_su3_algebra(2);
    auto matchings = perfect_matchings(*alg, Execution::serial);
    CHECK(matchings.size() == 9);  // frozen fixture, enumerated independently
    std::uint64_t full = Subquiver::full(alg->quiver()).mask();
    // l=1 socle-S0 almost-large supports from the brute-force scan
    auto records = classify_almost_large(*alg, 0, true, Execution::serial, false);
    std::set<std::uint64_t> ell1;
    for (const auto& rec : records)
        if (rec.ell == 1) ell1.insert(rec.support.mask());
    // each must be the complement of a perfect matching
    std::set<std::uint64_t> comp;
    for (auto m : matchings) comp.insert(full & ~m);
    for (auto s : ell1) CHECK(comp.count(s) == 1);
}

TEST_CASE("bounded comparison: degenerating a block chart grows the annihilator") {
    auto d4 = preprojective_D(4);
    auto charts = builtin_family_charts(*d4, 0);
    RepQ generic = charts[0].at({Rational(2), Rational(3)});
    RepQ degenerate = charts[0].at({Rational(2), Rational(0)});
    auto vg = p_annihilator(generic);
    auto vd = p_annihilator(degenerate);
    CHECK(compare_annihilators(vg, vd) == AnnOrder::strictly_contained);
    CHECK(compare_annihilators(vd, vg) == AnnOrder::strictly_contains);
    CHECK(compare_annihilators(vg, vg) == AnnOrder::equal);
    CHECK(vg.bound_caveat);
}

TEST_CASE("classification capability guards") {
    auto big = abelian_su3_algebra(4);
    CHECK_THROWS(classify_almost_large(*big, 0, true, Execution::serial, false));
    auto cyc = cyclic_mckay_algebra(5, 2);
    CHECK_THROWS(classify_almost_large(*cyc, 0, false));  // no built-in charts
    // D/E routes through the built-in charts
    auto d4 = preprojective_D(4);
    auto recs = classify_almost_large(*d4, 0, false);
    CHECK(recs.size() == 4);
    for (const auto& r : recs) CHECK(r.family.has_value());
}

TEST_CASE("the Qt^1 annihilator strictly contains the large annihilator") {
    auto alg = cyclic_mckay_algebra(7, 1);
    auto triples = cyclic_supports(*alg, 0);
    REQUIRE(triples.size() == 1);
    auto large = p_annihilator(ThinRep::all_ones(*alg, Subquiver::full(alg->quiver())));
    auto almost = p_annihilator(ThinRep::all_ones(*alg, triples[0].q_m_tilde));
    CHECK(compare_annihilators(large, almost) == AnnOrder::strictly_contained);
    // a path through a deleted arrow evaluates to zero
    ThinRep rep = ThinRep::all_ones(*alg, triples[0].q_m_tilde);
    Path dead = Path::from_names(alg->quiver(), {"a1", "a0"});  // a0 deleted
    CHECK(evaluate_path(rep.to_rep(), dead).is_zero());
    CHECK_FALSE(path_in_subquiver(dead, almost.support));
}

TEST_CASE("interval enumeration agrees with brute force") {
    std::mt19937 rng(41);
    for (auto alg : {conifold_algebra(), cyclic_mckay_algebra(5, 2),
                     cyclic_mckay_algebra(6, 5), abelian_su3_algebra(2)}) {
        int n = alg->quiver().num_arrows();
        std::uint64_t full = Subquiver::full(alg->quiver()).mask();
        auto pattern_valid = [&](std::uint64_t s) {
            for (const auto& rel : alg->relations) {
                std::uint64_t s1 = 0, s2 = 0;
                for (int a : rel.terms[0].path.arrows()) s1 |= std::uint64_t(1) << a;
                for (int a : rel.terms[1].path.arrows()) s2 |= std::uint64_t(1) << a;
                if (((s & s1) == s1) != ((s & s2) == s2)) return false;
            }
            return true;
        };
        for (int trial = 0; trial < 20; ++trial) {
            std::uint64_t lo = 0, hi = 0;
            for (int a = 0; a < n; ++a) {
                unsigned roll = rng() % 4;
                if (roll == 0) lo |= std::uint64_t(1) << a;   // forced in
                if (roll != 3) hi |= std::uint64_t(1) << a;   // else excluded
            }
            hi |= lo;
            auto fast = valid_supports_in_interval(*alg, lo, hi);
            std::vector<std::uint64_t> slow;
            std::uint64_t frees = hi & ~lo;
            // iterate subsets of the free positions
            std::uint64_t sub = 0;
            while (true) {
                std::uint64_t s = lo | sub;
                if (pattern_valid(s)) slow.push_back(s);
                if (sub == frees) break;
                sub = (sub - frees) & frees;
            }
            std::sort(slow.begin(), slow.end());
            CHECK(fast == slow);
            (void)full;
        }
    }
}
