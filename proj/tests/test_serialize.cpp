#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncres/annihilators.hpp"
#include "ncres/catalog.hpp"
#include "ncres/families.hpp"
#include "ncres/serialize.hpp"

using namespace ncres;

TEST_CASE("json round trip for every catalog algebra") {
    for (const auto& name : {"conifold", "cyclic(7,3)", "cyclic(5,4)", "su3(2)",
                             "su3(4)", "D(4)", "D(5)", "E6", "tautological(2)",
                             "tautological(4)"}) {
        auto alg = catalog_build(name);
        std::string text = algebra_to_json(*alg);
        auto back = algebra_from_json(text);
        CHECK(back->quiver().num_vertices() == alg->quiver().num_vertices());
        CHECK(back->quiver().num_arrows() == alg->quiver().num_arrows());
        CHECK(back->relations.size() == alg->relations.size());
        for (size_t i = 0; i < alg->relations.size(); ++i)
            CHECK(back->relations[i].str() == alg->relations[i].str());
        CHECK(back->expected_dimension_vector == alg->expected_dimension_vector);
        for (int a = 0; a < alg->quiver().num_arrows(); ++a) {
            CHECK(back->quiver().arrow(a).name == alg->quiver().arrow(a).name);
            CHECK(back->quiver().arrow(a).tail == alg->quiver().arrow(a).tail);
            CHECK(back->quiver().arrow(a).head == alg->quiver().arrow(a).head);
        }
        // serialization is stable
        CHECK(algebra_to_json(*back) == text);
    }
}

TEST_CASE("dot export basics") {
    auto alg = conifold_algebra();
    std::string dot = quiver_to_dot(alg->quiver(), alg->name);
    CHECK(dot.find("v0 -> v1") != std::string::npos);
    CHECK(dot.find("a1") != std::string::npos);
    // 2 nodes, 4 edges
    CHECK(std::count(dot.begin(), dot.end(), '>') == 4);  // one per edge

    auto cyc = cyclic_mckay_algebra(7, 3);
    auto triples = cyclic_supports(*cyc, 0);
    for (const auto& t : triples) {
        if (t.m != 2) continue;
        std::string sd = subquiver_to_dot(t.q_m_tilde, "Qt2");
        // dotted style marks arrows outside the support
        CHECK(sd.find("style=dotted") != std::string::npos);
        int dotted = 0;
        size_t pos = 0;
        while ((pos = sd.find("style=dotted", pos)) != std::string::npos) {
            ++dotted;
            pos += 1;
        }
        CHECK(dotted == cyc->quiver().num_arrows() - t.q_m_tilde.count());
        FamilyChart chart = trivialize_support(*cyc, t.q_m_tilde, 0);
        chart.generating_paths = {t.p_path, t.q_path};
        std::string cd = chart_to_dot(chart, "(x^2:y)");
        CHECK(cd.find("(x^2:y)") != std::string::npos);
    }
    // deterministic output
    CHECK(quiver_to_dot(alg->quiver(), alg->name) == dot);
}

TEST_CASE("cyclic chart dot separates core, added and deleted arrows") {
    auto cyc = cyclic_mckay_algebra(7, 3);
    for (const auto& t : cyclic_supports(*cyc, 0)) {
        if (t.m != 2) continue;
        FamilyChart chart = trivialize_support(*cyc, t.q_m_tilde, 0);
        chart.generating_paths = {t.p_path, t.q_path};
        std::string cd = chart_to_dot(chart, "(x^2:y)");
        auto count = [&](const char* needle) {
            int n = 0;
            size_t pos = 0;
            while ((pos = cd.find(needle, pos)) != std::string::npos) {
                ++n;
                pos += 1;
            }
            return n;
        };
        int core = t.p_path.length() + t.q_path.length();
        CHECK(count("style=dotted") == cyc->quiver().num_arrows() - t.q_m_tilde.count());
        CHECK(count("style=dashed") == t.q_m_tilde.count() - core);
    }
}
