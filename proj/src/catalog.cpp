#include "ncres/catalog.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncres {

namespace {

MatP scalar_label(const Poly& p) {
    MatP m(1, 1);
    m(0, 0) = p;
    return m;
}

Relation binomial(const Quiver& q, const std::vector<std::string>& left,
                  const std::vector<std::string>& right) {
    Relation r;
    r.terms.push_back({Rational(1), Path::from_names(q, left)});
    r.terms.push_back({Rational(-1), Path::from_names(q, right)});
    r.validate();
    return r;
}

} // namespace

std::shared_ptr<QuiverAlgebra> tautological_algebra(int n) {
    if (n < 1) throw std::invalid_argument("tautological_algebra: n >= 1 required");
    auto alg = std::make_shared<QuiverAlgebra>();
    alg->quiver_ptr = std::make_shared<Quiver>(2);
    Quiver& q = *alg->quiver_ptr;
    for (int i = 1; i <= n; ++i) q.add_arrow(0, 1, "a" + std::to_string(i));
    q.add_arrow(1, 0, "b");
    // cycle commutators: a_i b a_j = a_j b a_i at vertex 2, and the vertex-1
    // mirrors (b a_i)(b a_j) = (b a_j)(b a_i), for i < j
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::string ai = "a" + std::to_string(i), aj = "a" + std::to_string(j);
            alg->relations.push_back(binomial(q, {ai, "b", aj}, {aj, "b", ai}));
            alg->relations.push_back(
                binomial(q, {"b", ai, "b", aj}, {"b", aj, "b", ai}));
        }
    Impression imp;
    for (int i = 1; i <= n; ++i) imp.b_vars.push_back("z" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        imp.arrow_labels.push_back(scalar_label(Poly::var("z" + std::to_string(i))));
    imp.arrow_labels.push_back(scalar_label(Poly(Rational(1))));  // b
    imp.vertex_ranks = {1, 1};
    alg->impression = std::move(imp);
    alg->name = "tautological(" + std::to_string(n) + ")";
    alg->expected_dimension_vector = {1, 1};
    alg->validate();
    return alg;
}

std::shared_ptr<QuiverAlgebra> conifold_algebra() {
    auto alg = std::make_shared<QuiverAlgebra>();
    alg->quiver_ptr = std::make_shared<Quiver>(2);
    Quiver& q = *alg->quiver_ptr;
    q.add_arrow(0, 1, "a1");
    q.add_arrow(0, 1, "a2");
    q.add_arrow(1, 0, "b1");
    q.add_arrow(1, 0, "b2");
    // a_i b_j a_k = a_k b_j a_i and b_i a_j b_k = b_k a_j b_i, i != k
    for (int j = 1; j <= 2; ++j) {
        std::string bj = "b" + std::to_string(j), aj = "a" + std::to_string(j);
        alg->relations.push_back(binomial(q, {"a1", bj, "a2"}, {"a2", bj, "a1"}));
        alg->relations.push_back(binomial(q, {"b1", aj, "b2"}, {"b2", aj, "b1"}));
    }
    Impression imp;
    imp.b_vars = {"x", "y", "z", "w"};
    imp.arrow_labels = {scalar_label(Poly::var("x")), scalar_label(Poly::var("y")),
                        scalar_label(Poly::var("z")), scalar_label(Poly::var("w"))};
    imp.vertex_ranks = {1, 1};
    alg->impression = std::move(imp);
    alg->name = "conifold";
    alg->expected_dimension_vector = {1, 1};
    alg->validate();
    return alg;
}

std::shared_ptr<QuiverAlgebra> cyclic_mckay_algebra(int r, int b) {
    if (r < 2 || b < 1 || b > r - 1)
        throw std::invalid_argument("cyclic_mckay_algebra: need r >= 2, 1 <= b <= r-1");
    if (std::gcd(r, b) != 1)
        throw std::invalid_argument("cyclic_mckay_algebra: gcd(r,b) = 1 required");
    auto alg = std::make_shared<QuiverAlgebra>();
    alg->quiver_ptr = std::make_shared<Quiver>(r);
    Quiver& q = *alg->quiver_ptr;
    for (int i = 0; i < r; ++i) q.add_arrow(i, (i + 1) % r, "a" + std::to_string(i));
    for (int i = 0; i < r; ++i) q.add_arrow(i, (i + b) % r, "b" + std::to_string(i));
    for (int i = 0; i < r; ++i) {
        std::string ai = "a" + std::to_string(i), bi = "b" + std::to_string(i);
        std::string bn = "b" + std::to_string((i + 1) % r);
        std::string an = "a" + std::to_string((i + b) % r);
        alg->relations.push_back(binomial(q, {bn, ai}, {an, bi}));
    }
    Impression imp;
    imp.b_vars = {"x", "y"};
    for (int i = 0; i < r; ++i) imp.arrow_labels.push_back(scalar_label(Poly::var("x")));
    for (int i = 0; i < r; ++i) imp.arrow_labels.push_back(scalar_label(Poly::var("y")));
    imp.vertex_ranks.assign(size_t(r), 1);
    alg->impression = std::move(imp);
    alg->name = "cyclic(" + std::to_string(r) + "," + std::to_string(b) + ")";
    alg->expected_dimension_vector.assign(size_t(r), 1);
    alg->validate();
    return alg;
}

std::shared_ptr<QuiverAlgebra> abelian_su3_algebra(int r) {
    if (r < 2) throw std::invalid_argument("abelian_su3_algebra: r >= 2 required");
    auto alg = std::make_shared<QuiverAlgebra>();
    int nv = r * r;
    alg->quiver_ptr = std::make_shared<Quiver>(nv);
    Quiver& q = *alg->quiver_ptr;
    auto vid = [r](int i, int j) { return ((i % r + r) % r) + r * ((j % r + r) % r); };
    auto nm = [](const char* k, int v) { return std::string(k) + std::to_string(v); };
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) {
            int v = vid(i, j);
            q.add_arrow(v, vid(i, j + 1), nm("a", v));
        }
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) {
            int v = vid(i, j);
            q.add_arrow(v, vid(i + 1, j), nm("b", v));
        }
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) {
            int v = vid(i, j);
            q.add_arrow(v, vid(i - 1, j - 1), nm("c", v));
        }
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) {
            int v = vid(i, j);
            // ab - ba, bc - cb, ca - ac starting at (i,j)
            alg->relations.push_back(binomial(
                q, {nm("a", vid(i + 1, j)), nm("b", v)},
                {nm("b", vid(i, j + 1)), nm("a", v)}));
            alg->relations.push_back(binomial(
                q, {nm("b", vid(i - 1, j - 1)), nm("c", v)},
                {nm("c", vid(i + 1, j)), nm("b", v)}));
            alg->relations.push_back(binomial(
                q, {nm("c", vid(i, j + 1)), nm("a", v)},
                {nm("a", vid(i - 1, j - 1)), nm("c", v)}));
        }
    Impression imp;
    imp.b_vars = {"x", "y", "z"};
    for (int v = 0; v < nv; ++v) imp.arrow_labels.push_back(scalar_label(Poly::var("x")));
    for (int v = 0; v < nv; ++v) imp.arrow_labels.push_back(scalar_label(Poly::var("y")));
    for (int v = 0; v < nv; ++v) imp.arrow_labels.push_back(scalar_label(Poly::var("z")));
    imp.vertex_ranks.assign(size_t(nv), 1);
    alg->impression = std::move(imp);
    alg->name = "su3(" + std::to_string(r) + ")";
    alg->expected_dimension_vector.assign(size_t(nv), 1);
    alg->validate();
    return alg;
}

std::vector<std::string> catalog_names() {
    return {"tautological(n)", "conifold", "cyclic(r,b)", "su3(r)", "D(n+2)", "E6"};
}

std::shared_ptr<QuiverAlgebra> catalog_build(const std::string& name) {
    auto num = [](const std::string& s, size_t from, size_t to) {
        return std::stoi(s.substr(from, to - from));
    };
    if (name == "conifold") return conifold_algebra();
    if (name == "E6") return preprojective_E6();
    if (name.rfind("tautological(", 0) == 0)
        return tautological_algebra(num(name, 13, name.find(')')));
    if (name.rfind("cyclic(", 0) == 0) {
        auto comma = name.find(',');
        return cyclic_mckay_algebra(num(name, 7, comma),
                                    num(name, comma + 1, name.find(')')));
    }
    if (name.rfind("su3(", 0) == 0) return abelian_su3_algebra(num(name, 4, name.find(')')));
    if (name.rfind("D(", 0) == 0) return preprojective_D(num(name, 2, name.find(')')));
    throw std::invalid_argument("catalog_build: unknown algebra " + name);
}

} // namespace ncres
