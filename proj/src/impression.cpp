#include "ncres/impression.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ncres {

MatP tau_matrix(const Impression& imp, const Path& p) {
    if (p.is_trivial()) {
        int d = imp.vertex_ranks.at(size_t(p.head()));
        return MatP::identity(d);
    }
    MatP acc = imp.arrow_labels.at(size_t(p.arrows().front()));
    for (size_t i = 1; i < p.arrows().size(); ++i)
        acc = imp.arrow_labels.at(size_t(p.arrows()[i])) * acc;
    return acc;
}

Poly bar_tau(const Impression& imp, const Path& p) {
    MatP m = tau_matrix(imp, p);
    if (m.rows() != 1 || m.cols() != 1)
        throw std::domain_error("bar_tau: path label is not scalar");
    return m(0, 0);
}

bool impression_satisfies_relations(const QuiverAlgebra& alg) {
    if (!alg.impression) return false;
    const Impression& imp = *alg.impression;
    for (const auto& rel : alg.relations) {
        MatP acc(imp.vertex_ranks.at(size_t(rel.head())),
                 imp.vertex_ranks.at(size_t(rel.tail())));
        for (const auto& term : rel.terms) {
            MatP m = tau_matrix(imp, term.path);
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) {
                    Poly p = m(i, j);
                    p *= term.coef;
                    acc(i, j) += p;
                }
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

std::vector<Poly> center_generators(const QuiverAlgebra& alg, int max_len) {
    if (!alg.impression || !alg.impression->is_thin())
        throw std::domain_error("center_generators: thin impression required");
    const Impression& imp = *alg.impression;
    const Quiver& q = alg.quiver();
    // monomial exponent vectors over the B-variables reachable as cycle labels
    size_t nb = imp.b_vars.size();
    std::vector<int> arrow_exp;  // flattened: arrow -> exponent vector
    std::vector<std::vector<int>> label_of(size_t(q.num_arrows()));
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Poly& l = imp.label(a);
        if (l.num_terms() != 1)
            throw std::domain_error("center_generators: monomial labels required");
        std::vector<int> e(nb, 0);
        const auto& [expv, coef] = *l.terms().begin();
        if (!coef.is_one())
            throw std::domain_error("center_generators: unit coefficients required");
        for (size_t k = 0; k < l.vars().size(); ++k) {
            auto it = std::find(imp.b_vars.begin(), imp.b_vars.end(), l.vars()[k]);
            e[size_t(it - imp.b_vars.begin())] = expv[k];
        }
        label_of[size_t(a)] = e;
    }
    // per start vertex: set of (vertex, monomial) states reachable
    std::set<std::vector<int>> common;
    bool first_vertex = true;
    for (int v0 = 0; v0 < q.num_vertices(); ++v0) {
        std::set<std::pair<int, std::vector<int>>> seen;
        std::vector<std::pair<int, std::vector<int>>> frontier = {
            {v0, std::vector<int>(nb, 0)}};
        seen.insert(frontier[0]);
        std::set<std::vector<int>> cycles;
        for (int len = 1; len <= max_len; ++len) {
            std::vector<std::pair<int, std::vector<int>>> next;
            for (const auto& [v, e] : frontier)
                for (int a : q.arrows_from(v)) {
                    auto e2 = e;
                    for (size_t k = 0; k < nb; ++k) e2[k] += label_of[size_t(a)][k];
                    std::pair<int, std::vector<int>> st{q.arrow(a).head, e2};
                    if (seen.insert(st).second) next.push_back(st);
                    if (q.arrow(a).head == v0) cycles.insert(e2);
                }
            frontier = std::move(next);
        }
        if (first_vertex) {
            common = cycles;
            first_vertex = false;
        } else {
            std::set<std::vector<int>> inter;
            std::set_intersection(common.begin(), common.end(), cycles.begin(),
                                  cycles.end(), std::inserter(inter, inter.begin()));
            common = std::move(inter);
        }
    }
    // generating set by degree: drop sums of two smaller central exponents
    std::vector<std::vector<int>> sorted(common.begin(), common.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    });
    std::vector<std::vector<int>> gens;
    std::set<std::vector<int>> span(common.begin(), common.end());
    for (const auto& e : sorted) {
        bool product = false;
        for (const auto& g : gens) {
            std::vector<int> rest(nb);
            bool ok = true;
            for (size_t k = 0; k < nb; ++k) {
                rest[k] = e[k] - g[k];
                if (rest[k] < 0) ok = false;
            }
            if (!ok) continue;
            bool rest_zero = std::all_of(rest.begin(), rest.end(),
                                         [](int x) { return x == 0; });
            if (!rest_zero && span.count(rest)) { product = true; break; }
        }
        if (!product) gens.push_back(e);
    }
    std::vector<Poly> out;
    for (const auto& e : gens)
        out.push_back(Poly::monomial(imp.b_vars, e, Rational(1)));
    return out;
}

std::vector<Poly> family_coordinates(const QuiverAlgebra& alg, const FamilyChart& chart) {
    if (!alg.impression)
        throw std::domain_error("family_coordinates: algebra has no impression");
    if (chart.generating_paths.empty())
        throw std::domain_error("family_coordinates: chart has no generating paths");
    std::vector<Poly> out;
    for (const auto& p : chart.generating_paths)
        out.push_back(bar_tau(*alg.impression, p));
    return out;
}

} // namespace ncres
