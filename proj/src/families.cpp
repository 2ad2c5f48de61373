#include "ncres/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncres {

RepQ FamilyChart::at(const std::vector<Rational>& values) const {
    return eval_rep(sigma, point(values));
}

std::map<std::string, Rational> FamilyChart::point(
    const std::vector<Rational>& values) const {
    if (values.size() != params.size())
        throw std::invalid_argument("FamilyChart::point: wrong arity");
    std::map<std::string, Rational> pt;
    for (size_t i = 0; i < params.size(); ++i) pt[params[i]] = values[i];
    return pt;
}

std::vector<Rational> FamilyChart::generic_point(int offset) const {
    static const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<Rational> v;
    for (size_t i = 0; i < params.size(); ++i)
        v.push_back(Rational(primes[(i + size_t(offset)) % 12]));
    return v;
}

namespace {

struct SupportData {
    std::vector<int> arrows;          // arrow ids in the support
    std::map<int, int> index;         // arrow id -> position
    std::vector<std::vector<Rational>> rel_rows;  // active relation exponent rows
};

SupportData support_data(const QuiverAlgebra& alg, const Subquiver& support) {
    SupportData d;
    const Quiver& q = alg.quiver();
    for (int a = 0; a < q.num_arrows(); ++a)
        if (support.contains(a)) {
            d.index[a] = int(d.arrows.size());
            d.arrows.push_back(a);
        }
    for (const auto& rel : alg.relations) {
        if (rel.terms.size() != 2)
            throw std::domain_error("trivialize_support: binomial relations required");
        bool in1 = true, in2 = true;
        for (int a : rel.terms[0].path.arrows()) in1 &= support.contains(a);
        for (int a : rel.terms[1].path.arrows()) in2 &= support.contains(a);
        if (in1 != in2)
            throw std::domain_error("trivialize_support: support admits no valid module");
        if (!in1) continue;
        if (!(-rel.terms[1].coef / rel.terms[0].coef == Rational(1)))
            throw std::domain_error("trivialize_support: unit coefficient ratios required");
        std::vector<Rational> row(d.arrows.size(), Rational(0));
        for (int a : rel.terms[0].path.arrows()) row[size_t(d.index[a])] += Rational(1);
        for (int a : rel.terms[1].path.arrows()) row[size_t(d.index[a])] -= Rational(1);
        d.rel_rows.push_back(std::move(row));
    }
    return d;
}

/// Longest-path potential of the support DAG: L(v) = longest path from v.
/// Throws if the support has an oriented cycle.
std::vector<int> dag_longest(const QuiverAlgebra& alg, const Subquiver& support) {
    const Quiver& q = alg.quiver();
    int n = q.num_vertices();
    std::vector<int> state(size_t(n), 0), L(size_t(n), 0);  // 0/1/2 = new/open/done
    std::function<void(int)> visit = [&](int v) {
        state[size_t(v)] = 1;
        int best = 0;
        for (int a : q.arrows_from(v)) {
            if (!support.contains(a)) continue;
            int h = q.arrow(a).head;
            if (state[size_t(h)] == 1)
                throw std::domain_error("trivialize_support: support has an oriented cycle");
            if (state[size_t(h)] == 0) visit(h);
            best = std::max(best, 1 + L[size_t(h)]);
        }
        L[size_t(v)] = best;
        state[size_t(v)] = 2;
    };
    for (int v = 0; v < n; ++v)
        if (state[size_t(v)] == 0) visit(v);
    return L;
}

/// Does some vertex potential realize the prescribed per-arrow jumps?
bool potential_realizable(const QuiverAlgebra& alg, const SupportData& d,
                          const std::vector<Rational>& jumps,
                          std::vector<Rational>* out_potential = nullptr) {
    const Quiver& q = alg.quiver();
    int n = q.num_vertices();
    std::vector<Rational> p(size_t(n), Rational(0));
    std::vector<bool> done(size_t(n), false);
    for (int root = 0; root < n; ++root) {
        if (done[size_t(root)]) continue;
        done[size_t(root)] = true;
        std::vector<int> stack = {root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (size_t k = 0; k < d.arrows.size(); ++k) {
                const Arrow& ar = q.arrow(d.arrows[k]);
                if (ar.tail == v && !done[size_t(ar.head)]) {
                    p[size_t(ar.head)] = p[size_t(v)] + jumps[k];
                    done[size_t(ar.head)] = true;
                    stack.push_back(ar.head);
                } else if (ar.head == v && !done[size_t(ar.tail)]) {
                    p[size_t(ar.tail)] = p[size_t(v)] - jumps[k];
                    done[size_t(ar.tail)] = true;
                    stack.push_back(ar.tail);
                }
            }
        }
    }
    for (size_t k = 0; k < d.arrows.size(); ++k) {
        const Arrow& ar = q.arrow(d.arrows[k]);
        if (p[size_t(ar.head)] - p[size_t(ar.tail)] != jumps[k]) return false;
    }
    if (out_potential) *out_potential = p;
    return true;
}

std::vector<std::vector<Rational>> gauge_vectors(const QuiverAlgebra& alg,
                                                 const SupportData& d) {
    const Quiver& q = alg.quiver();
    std::vector<std::vector<Rational>> g;
    for (int v = 0; v < q.num_vertices(); ++v) {
        std::vector<Rational> row(d.arrows.size(), Rational(0));
        for (size_t k = 0; k < d.arrows.size(); ++k) {
            const Arrow& ar = q.arrow(d.arrows[k]);
            if (ar.head == v) row[k] += Rational(1);
            if (ar.tail == v) row[k] -= Rational(1);
        }
        g.push_back(std::move(row));
    }
    return g;
}

MatQ rows_to_matrix(const std::vector<std::vector<Rational>>& rows, int cols) {
    MatQ m(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m(int(i), j) = rows[i][size_t(j)];
    return m;
}

/// Exponent matrix rows -> chart.  Row k gives the exponent of parameter k in
/// each arrow's label.
FamilyChart chart_from_exponents(const QuiverAlgebra& alg, const Subquiver& support,
                                 int sink, const SupportData& d,
                                 const std::vector<std::vector<long long>>& expo) {
    FamilyChart chart;
    chart.algebra = &alg;
    chart.name = alg.name + " chart, sink " + std::to_string(sink);
    chart.thin = true;
    chart.support = support;
    chart.sink = sink;
    size_t m = expo.size();
    for (size_t k = 0; k < m; ++k)
        chart.params.push_back(m == 2 ? (k == 0 ? "s" : "t")
                                      : "t" + std::to_string(k + 1));
    RepP sigma;
    sigma.algebra = &alg;
    const Quiver& q = alg.quiver();
    sigma.dim.assign(size_t(q.num_vertices()), 1);
    for (int a = 0; a < q.num_arrows(); ++a) {
        MatP mat(1, 1);
        auto it = d.index.find(a);
        if (it != d.index.end()) {
            Poly label(Rational(1));
            for (size_t k = 0; k < m; ++k) {
                long long e = expo[k][size_t(it->second)];
                if (e < 0)
                    throw std::logic_error("chart_from_exponents: negative exponent");
                if (e > 0) label *= Poly::var(chart.params[k]).pow(int(e));
            }
            mat(0, 0) = label;
        }
        sigma.mats.push_back(std::move(mat));
    }
    chart.sigma = std::move(sigma);
    if (!check_relations(chart.sigma).empty())
        throw std::logic_error("trivialize_support: chart violates relations");
    return chart;
}

} // namespace

FamilyChart trivialize_support(const QuiverAlgebra& alg, const Subquiver& support,
                               int sink) {
    const Quiver& q = alg.quiver();
    if (support.quiver() != &q)
        throw std::invalid_argument("trivialize_support: support of another quiver");
    SupportData d = support_data(alg, support);
    int na = int(d.arrows.size());
    // solution space of the active relation rows
    MatQ relm = rows_to_matrix(d.rel_rows, na);
    auto sol = kernel_basis(relm);  // vectors in Q^na
    auto gammas = gauge_vectors(alg, d);
    MatQ gm = rows_to_matrix(gammas, na);
    int gauge_rank = rank(gm);
    int md = int(sol.size()) - gauge_rank;
    if (md < 0) throw std::logic_error("trivialize_support: rank inconsistency");

    // preferred sparse labeling: one parameter per out-arrow of the sources
    std::vector<int> L = dag_longest(alg, support);
    std::vector<int> source_out;
    for (size_t k = 0; k < d.arrows.size(); ++k) {
        int tail = q.arrow(d.arrows[k]).tail;
        bool has_in = false;
        for (int a : q.arrows_into(tail))
            if (support.contains(a)) has_in = true;
        if (!has_in) source_out.push_back(int(k));
    }
    auto try_sparse = [&]() -> std::optional<FamilyChart> {
        if (int(source_out.size()) != md + 1) return std::nullopt;
        // rows e_k must avoid all active relations
        for (const auto& row : d.rel_rows)
            for (int k : source_out)
                if (!row[size_t(k)].is_zero()) return std::nullopt;
        // Sum of rows must be a gauge potential (jump 1 on candidates, 0 off)
        std::vector<Rational> jumps(size_t(na), Rational(0));
        for (int k : source_out) jumps[size_t(k)] = Rational(1);
        if (!potential_realizable(alg, d, jumps)) return std::nullopt;
        // rows must span the moduli space modulo gauge
        std::vector<std::vector<Rational>> stacked = gammas;
        for (int k : source_out) {
            std::vector<Rational> row(size_t(na), Rational(0));
            row[size_t(k)] = Rational(1);
            stacked.push_back(row);
        }
        if (rank(rows_to_matrix(stacked, na)) != gauge_rank + md)
            return std::nullopt;
        std::vector<std::vector<long long>> expo(
            source_out.size(), std::vector<long long>(size_t(na), 0));
        for (size_t k = 0; k < source_out.size(); ++k)
            expo[k][size_t(source_out[k])] = 1;
        return chart_from_exponents(alg, support, sink, d, expo);
    };
    if (auto c = try_sparse()) return *c;

    // generic construction: integer complement basis of the gauge inside the
    // relation-solution space, plus one scale row so that the diagonal action
    // is gauge-realizable
    std::vector<std::vector<Rational>> stacked = gammas;
    std::vector<std::vector<Rational>> cbasis;
    for (const auto& v : sol) {
        auto trial = stacked;
        trial.push_back(v);
        if (rank(rows_to_matrix(trial, na)) > rank(rows_to_matrix(stacked, na))) {
            stacked.push_back(v);
            cbasis.push_back(v);
        }
        if (int(cbasis.size()) == md) break;
    }
    if (int(cbasis.size()) != md)
        throw std::logic_error("trivialize_support: complement construction failed");
    // integerize
    std::vector<std::vector<long long>> crows;
    for (auto& v : cbasis) {
        BigInt lcm = 1;
        for (const auto& x : v)
            lcm = lcm / boost::multiprecision::gcd(lcm, x.den()) * x.den();
        std::vector<long long> row;
        BigInt g = 0;
        for (const auto& x : v) {
            BigInt val = x.num() * (lcm / x.den());
            g = boost::multiprecision::gcd(g, val < 0 ? BigInt(-val) : val);
        }
        if (g == 0) g = 1;
        for (const auto& x : v) {
            BigInt val = x.num() * (lcm / x.den()) / g;
            row.push_back(val.convert_to<long long>());
        }
        crows.push_back(std::move(row));
    }
    // tau: DAG potential jumps, all >= 1 on support arrows
    std::vector<long long> tau(static_cast<size_t>(na));
    for (size_t k = 0; k < d.arrows.size(); ++k) {
        const Arrow& ar = q.arrow(d.arrows[k]);
        tau[k] = L[size_t(ar.tail)] - L[size_t(ar.head)];
        if (tau[k] < 1)
            throw std::logic_error("trivialize_support: potential not positive");
    }
    // shift each c-row by a multiple of tau to make it nonnegative
    std::vector<std::vector<long long>> expo;
    long long shift_total = 0;
    for (auto& row : crows) {
        long long need = 0;
        for (size_t k = 0; k < row.size(); ++k) {
            if (row[k] < 0) {
                long long m = (-row[k] + tau[k] - 1) / tau[k];
                need = std::max(need, m);
            }
        }
        std::vector<long long> shifted(row.size());
        for (size_t k = 0; k < row.size(); ++k) shifted[k] = row[k] + need * tau[k];
        shift_total += need;
        expo.push_back(std::move(shifted));
    }
    // scale row: K*tau - sum of shifted rows, K minimal making it nonnegative
    long long K = shift_total;
    for (size_t k = 0; k < size_t(na); ++k) {
        long long s = 0;
        for (const auto& row : expo) s += row[k];
        long long m = (s + tau[k] - 1) / tau[k];
        K = std::max(K, m);
    }
    std::vector<long long> w(static_cast<size_t>(na));
    for (size_t k = 0; k < size_t(na); ++k) {
        long long s = 0;
        for (const auto& row : expo) s += row[k];
        w[k] = K * tau[k] - s;
        if (w[k] < 0) throw std::logic_error("trivialize_support: scale row negative");
    }
    expo.push_back(std::move(w));
    return chart_from_exponents(alg, support, sink, d, expo);
}

namespace {

/// Exponent matrix of a thin chart: rows = parameters, columns = support arrows.
std::vector<std::vector<long long>> chart_exponents(const FamilyChart& chart,
                                                    const SupportData& d) {
    std::vector<std::vector<long long>> expo(
        chart.params.size(), std::vector<long long>(d.arrows.size(), 0));
    for (size_t k = 0; k < d.arrows.size(); ++k) {
        const Poly& label = chart.sigma.mats[size_t(d.arrows[k])](0, 0);
        if (label.num_terms() != 1)
            throw std::domain_error("chart label is not a monomial");
        const auto& [expv, coef] = *label.terms().begin();
        for (size_t i = 0; i < label.vars().size(); ++i) {
            if (expv[i] == 0) continue;
            auto it = std::find(chart.params.begin(), chart.params.end(),
                                label.vars()[i]);
            if (it == chart.params.end())
                throw std::domain_error("chart label uses a non-parameter variable");
            expo[size_t(it - chart.params.begin())][k] = expv[i];
        }
    }
    return expo;
}

} // namespace

FamilyVerdict solve_iso_parameters(const FamilyChart& chart) {
    if (!chart.thin)
        throw std::domain_error(
            "solve_iso_parameters: use certify_p1_block_chart for block charts");
    const QuiverAlgebra& alg = *chart.algebra;
    const Quiver& q = alg.quiver();
    SupportData d = support_data(alg, chart.support);
    auto expo = chart_exponents(chart, d);
    int m = int(chart.params.size());
    int nv = q.num_vertices();
    // kernel of [E_a | -(e_head - e_tail)] over (L, y)
    MatQ sys(int(d.arrows.size()), m + nv);
    for (size_t k = 0; k < d.arrows.size(); ++k) {
        const Arrow& ar = q.arrow(d.arrows[k]);
        for (int i = 0; i < m; ++i) sys(int(k), i) = Rational(expo[size_t(i)][k]);
        sys(int(k), m + ar.head) -= Rational(1);
        sys(int(k), m + ar.tail) += Rational(1);
    }
    auto ker = kernel_basis(sys);
    // project to the L-coordinates and reduce
    std::vector<std::vector<Rational>> lat;
    for (const auto& v : ker) lat.push_back({v.begin(), v.begin() + m});
    MatQ latm = rows_to_matrix(lat, m);
    auto pivots = rref(latm);
    FamilyVerdict verdict;
    for (size_t i = 0; i < pivots.size(); ++i) {
        std::vector<Rational> row(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) row[size_t(j)] = latm(int(i), j);
        verdict.lattice.push_back(std::move(row));
    }
    verdict.moduli_dim = m - int(pivots.size());
    bool diagonal = verdict.lattice.size() == 1;
    if (diagonal)
        for (int j = 0; j < m; ++j)
            if (verdict.lattice[0][size_t(j)] != verdict.lattice[0][0])
                diagonal = false;
    if (diagonal && !verdict.lattice[0][0].is_zero()) {
        verdict.kind = FamilyVerdict::Kind::projective;
        verdict.detail = "P^" + std::to_string(m - 1) + " family";
    } else if (verdict.lattice.empty()) {
        verdict.kind = FamilyVerdict::Kind::torus;
        verdict.detail = "torus family of dimension " + std::to_string(m);
    } else {
        verdict.kind = FamilyVerdict::Kind::other;
        verdict.detail = "scaling lattice of rank " +
                         std::to_string(verdict.lattice.size());
    }
    return verdict;
}


namespace {

/// Row reduction preferring unit pivots, so that the expressing coefficients
/// of the right block stay integral whenever a unimodular choice exists.
std::vector<int> rref_prefer_unit(MatQ& m, int left_cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < left_cols && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            if (piv < 0) piv = r;
            const Rational& x = m(r, col);
            if ((x == Rational(1) || x == Rational(-1)) &&
                !(m(piv, col) == Rational(1) || m(piv, col) == Rational(-1))) {
                piv = r;
            }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        Rational inv = m(row, col).inv();
        for (int c = 0; c < m.cols(); ++c) m(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Rational f = m(r, col);
            for (int c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Exact d-th root of a rational, if it exists.
std::optional<Rational> rational_root(const Rational& q, long long d) {
    if (d == 1) return q;
    if (q.is_zero()) return Rational(0);
    if (q.sign() < 0 && d % 2 == 0) return std::nullopt;
    auto int_root = [](BigInt a, long long n) -> std::optional<BigInt> {
        bool neg = a < 0;
        if (neg) a = -a;
        BigInt lo = 0, hi = 1;
        while (boost::multiprecision::pow(hi, unsigned(n)) < a) hi <<= 1;
        while (lo < hi) {
            BigInt mid = (lo + hi) / 2;
            if (boost::multiprecision::pow(mid, unsigned(n)) < a) lo = mid + 1;
            else hi = mid;
        }
        if (boost::multiprecision::pow(lo, unsigned(n)) != a) return std::nullopt;
        return neg ? BigInt(-lo) : lo;
    };
    auto rn = int_root(q.num(), d);
    auto rd = int_root(q.den(), d);
    if (!rn || !rd) return std::nullopt;
    return Rational(*rn, *rd);
}

/// Evaluates prod_c values[c]^{exps[c]} with rational exponents, extracting
/// exact roots; nullopt when the result is not rational.
std::optional<Rational> monomial_power(const std::vector<Rational>& values,
                                       const std::vector<Rational>& exps) {
    BigInt lcm = 1;
    for (const auto& e : exps)
        lcm = lcm / boost::multiprecision::gcd(lcm, e.den()) * e.den();
    Rational inner(1);
    for (size_t c = 0; c < exps.size(); ++c) {
        if (exps[c].is_zero()) continue;
        BigInt scaled = exps[c].num() * (lcm / exps[c].den());
        inner *= values[c].pow(scaled.convert_to<long long>());
    }
    return rational_root(inner, lcm.convert_to<long long>());
}

} // namespace

std::optional<std::vector<Rational>> normalize_to_chart(const ThinRep& rep,
                                                        const FamilyChart& chart) {
    if (!chart.thin) throw std::domain_error("normalize_to_chart: thin chart required");
    if (!(rep.support() == chart.support)) return std::nullopt;
    const QuiverAlgebra& alg = *chart.algebra;
    const Quiver& q = alg.quiver();
    SupportData d = support_data(alg, chart.support);
    auto expo = chart_exponents(chart, d);
    int m = int(chart.params.size());
    int nv = q.num_vertices();
    // unknowns: log t (m), log g (nv); equations: per support arrow,
    // E^T t + g_head - g_tail = log x_a.  Solve formally so that each t_k is
    // an integer-exponent monomial in the arrow values.
    int cols = m + nv;
    int rows = int(d.arrows.size());
    MatQ sys(rows, cols);
    for (int k = 0; k < rows; ++k) {
        const Arrow& ar = q.arrow(d.arrows[size_t(k)]);
        for (int i = 0; i < m; ++i) sys(k, i) = Rational(expo[size_t(i)][size_t(k)]);
        sys(k, m + ar.head) += Rational(1);
        sys(k, m + ar.tail) -= Rational(1);
    }
    // augmented elimination: [sys | I] to express a particular solution
    MatQ aug(rows, cols + rows);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug(i, j) = sys(i, j);
        aug(i, cols + i) = Rational(1);
    }
    auto pivots = rref_prefer_unit(aug, cols);
    // consistency: zero rows on the left must evaluate to 1 multiplicatively
    std::vector<Rational> xs;
    for (size_t k = 0; k < d.arrows.size(); ++k)
        xs.push_back(rep.values[size_t(d.arrows[k])]);
    auto row_value = [&](int r) -> std::optional<Rational> {
        std::vector<Rational> exps(size_t(rows), Rational(0));
        for (int c = 0; c < rows; ++c) exps[size_t(c)] = aug(r, cols + c);
        return monomial_power(xs, exps);
    };
    for (size_t r = pivots.size(); r < size_t(rows); ++r) {
        auto val = row_value(int(r));
        if (!val || !(*val == Rational(1))) return std::nullopt;
    }
    // particular solution for the t-coordinates
    std::vector<Rational> t_values(size_t(m), Rational(1));
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        int col = pivots[pi];
        if (col >= m) continue;
        auto val = row_value(int(pi));
        if (!val) return std::nullopt;
        t_values[size_t(col)] = *val;
    }
    // verify via an actual isomorphism test
    RepQ target = chart.at(t_values);
    ThinRep target_thin;
    target_thin.algebra = &alg;
    target_thin.values.assign(size_t(q.num_arrows()), Rational(0));
    for (int a = 0; a < q.num_arrows(); ++a)
        target_thin.values[size_t(a)] = target.mats[size_t(a)](0, 0);
    if (!iso_test_thin(rep, target_thin)) return std::nullopt;
    return t_values;
}

std::optional<std::vector<Rational>> normalize_to_chart(const RepQ& rep,
                                                        const FamilyChart& chart) {
    const QuiverAlgebra& alg = *chart.algebra;
    const Quiver& q = alg.quiver();
    if (rep.dim != chart.sigma.dim) return std::nullopt;
    // entries of sigma, each a monomial in the parameters times a rational
    struct Entry {
        int arrow, i, j;
        Rational coef;
        std::vector<long long> expo;  // per parameter
    };
    int m = int(chart.params.size());
    std::vector<Entry> entries;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const MatP& mat = chart.sigma.mats[size_t(a)];
        for (int i = 0; i < mat.rows(); ++i)
            for (int j = 0; j < mat.cols(); ++j) {
                const Poly& p = mat(i, j);
                if (p.is_zero()) {
                    if (!rep.mats[size_t(a)](i, j).is_zero()) return std::nullopt;
                    continue;
                }
                if (rep.mats[size_t(a)](i, j).is_zero()) return std::nullopt;
                if (p.num_terms() != 1)
                    throw std::domain_error(
                        "normalize_to_chart: non-monomial chart entry");
                Entry e{a, i, j, p.terms().begin()->second,
                        std::vector<long long>(size_t(m), 0)};
                const auto& expv = p.terms().begin()->first;
                for (size_t k = 0; k < p.vars().size(); ++k) {
                    if (expv[k] == 0) continue;
                    auto it = std::find(chart.params.begin(), chart.params.end(),
                                        p.vars()[k]);
                    if (it == chart.params.end())
                        throw std::domain_error(
                            "normalize_to_chart: unexpected chart variable");
                    e.expo[size_t(it - chart.params.begin())] = expv[k];
                }
                entries.push_back(std::move(e));
            }
    }
    // line gauges: one unknown per basis line of each vertex
    std::vector<int> line_offset(rep.dim.size() + 1, 0);
    for (size_t v = 0; v < rep.dim.size(); ++v)
        line_offset[v + 1] = line_offset[v] + rep.dim[v];
    int nl = line_offset[rep.dim.size()];
    int cols = m + nl, rows = int(entries.size());
    MatQ sys(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Entry& e = entries[size_t(r)];
        for (int k = 0; k < m; ++k) sys(r, k) = Rational(e.expo[size_t(k)]);
        const Arrow& ar = q.arrow(e.arrow);
        sys(r, m + line_offset[size_t(ar.head)] + e.i) += Rational(1);
        sys(r, m + line_offset[size_t(ar.tail)] + e.j) -= Rational(1);
    }
    MatQ aug(rows, cols + rows);
    for (int i = 0; i < rows; ++i) {
        for (int jj = 0; jj < cols; ++jj) aug(i, jj) = sys(i, jj);
        aug(i, cols + i) = Rational(1);
    }
    auto pivots = rref_prefer_unit(aug, cols);
    std::vector<Rational> xs;
    for (const Entry& e : entries)
        xs.push_back(rep.mats[size_t(e.arrow)](e.i, e.j) / e.coef);
    auto row_value = [&](int r) -> std::optional<Rational> {
        std::vector<Rational> exps(size_t(rows), Rational(0));
        for (int c = 0; c < rows; ++c) exps[size_t(c)] = aug(r, cols + c);
        return monomial_power(xs, exps);
    };
    for (size_t r = pivots.size(); r < size_t(rows); ++r) {
        auto val = row_value(int(r));
        if (!val || !(*val == Rational(1))) return std::nullopt;
    }
    std::vector<Rational> t_values(size_t(m), Rational(1));
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        if (pivots[pi] >= m) continue;
        auto val = row_value(int(pi));
        if (!val) return std::nullopt;
        t_values[size_t(pivots[pi])] = *val;
    }
    if (!iso_test(rep, chart.at(t_values))) return std::nullopt;
    return t_values;
}

ShrinkResult shrink(const FamilyChart& chart) {
    if (!chart.thin)
        throw std::domain_error("shrink: use shrink_block_chart for block charts");
    const QuiverAlgebra& alg = *chart.algebra;
    const Quiver& q = alg.quiver();
    ShrinkResult res;
    auto verdict = solve_iso_parameters(chart);
    if (verdict.kind != FamilyVerdict::Kind::projective)
        throw std::domain_error("shrink: chart is not a certified projective family");
    // 1-dimensional socle hypothesis
    ThinRep generic;
    generic.algebra = &alg;
    generic.values.assign(size_t(q.num_arrows()), Rational(0));
    {
        RepQ at = chart.at(chart.generic_point());
        for (int a = 0; a < q.num_arrows(); ++a)
            generic.values[size_t(a)] = at.mats[size_t(a)](0, 0);
    }
    auto terminal = thin_terminal_sccs(generic);
    if (terminal.size() != 1 || terminal[0].size() != 1)
        throw std::domain_error("shrink: socle of the family members is not 1-dimensional");
    // potentials: jump = label degree on each arrow
    SupportData d = support_data(alg, chart.support);
    auto expo = chart_exponents(chart, d);
    std::vector<Rational> jumps(d.arrows.size(), Rational(0));
    for (size_t k = 0; k < d.arrows.size(); ++k) {
        long long s = 0;
        for (const auto& row : expo) s += row[k];
        jumps[k] = Rational(s);
    }
    std::vector<Rational> pot;
    if (!potential_realizable(alg, d, jumps, &pot))
        throw std::logic_error("shrink: diagonal scaling is not gauge-realizable");
    // integral potentials normalized to minimum 0
    Rational minp = pot[0];
    for (const auto& x : pot) minp = std::min(minp, x, [](const Rational& a, const Rational& b) { return a < b; });
    std::vector<long long> p(pot.size());
    for (size_t v = 0; v < pot.size(); ++v) {
        Rational x = pot[v] - minp;
        if (!x.is_integer()) throw std::logic_error("shrink: non-integral potential");
        p[v] = x.num().convert_to<long long>();
    }
    res.min_power = 0;
    for (int v = 0; v < q.num_vertices(); ++v) {
        MatL block(1, 1);
        block(0, 0) = Laurent::lambda_power(int(p[size_t(v)]));
        res.phi_lambda.push_back(block);
    }
    // V0 = image of phi_0 inside the t=0 module: the minimum-potential lines,
    // with the constant arrows acting between them
    std::vector<int> mins;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (p[size_t(v)] == 0) mins.push_back(v);
    res.v0_total_dim = int(mins.size());
    // V_z / ker phi_0^z: the minimum-potential lines with the surviving arrow
    // action (arrows between minimum lines keep their V_z values; all others
    // hit the kernel)
    auto quotient_at = [&](const std::vector<Rational>& z) {
        RepQ at = chart.at(z);
        RepQ v0;
        v0.algebra = &alg;
        v0.dim.assign(size_t(q.num_vertices()), 0);
        for (int v : mins) v0.dim[size_t(v)] = 1;
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(a);
            MatQ mat(v0.dim[size_t(ar.head)], v0.dim[size_t(ar.tail)]);
            if (mat.rows() == 1 && mat.cols() == 1) {
                // only jump-0 arrows act inside V0; parameter arrows vanish
                // in the limit
                auto it = d.index.find(a);
                if (it != d.index.end() && jumps[size_t(it->second)].is_zero())
                    mat(0, 0) = at.mats[size_t(a)](0, 0);
            }
            v0.mats.push_back(std::move(mat));
        }
        return v0;
    };
    RepQ v0a = quotient_at(chart.generic_point(0));
    RepQ v0b = quotient_at(chart.generic_point(1));
    res.semisimple = true;
    for (int a = 0; a < q.num_arrows(); ++a)
        if (!v0a.mats[size_t(a)].is_zero()) res.semisimple = false;
    if (res.semisimple)
        for (int v : mins) res.decomposition[v] += 1;
    // independence checks: the quotient is the same module at two parameter
    // points, and c*lambda^k * phi has the same kernel lines after
    // renormalizing by its own minimal power.
    res.independence_ok = iso_test(v0a, v0b).has_value();
    {
        auto min_lines = [&](const std::vector<MatL>& phi) {
            int mp = 0;
            bool first = true;
            for (const auto& blk : phi) {
                if (blk(0, 0).is_zero()) continue;
                int v = blk(0, 0).min_power();
                mp = first ? v : std::min(mp, v);
                first = false;
            }
            std::vector<int> lines;
            for (size_t v = 0; v < phi.size(); ++v)
                if (!phi[v](0, 0).is_zero() && phi[v](0, 0).min_power() == mp)
                    lines.push_back(int(v));
            return lines;
        };
        std::vector<MatL> rescaled;
        for (const auto& blk : res.phi_lambda) {
            MatL b(1, 1);
            b(0, 0) = blk(0, 0).shifted(3).scaled(Rational(5));
            rescaled.push_back(b);
        }
        res.independence_ok =
            res.independence_ok && min_lines(res.phi_lambda) == min_lines(rescaled);
    }
    // in every catalog case V0 coincides with the top of the members; the
    // comparison is carried as a flag so a failure would surface in reports
    res.equals_member_top =
        res.semisimple &&
        socle_top(chart.at(chart.generic_point(0))).top == res.decomposition;
    res.detail = "V0 supported on " + std::to_string(res.v0_total_dim) + " line(s)";
    return res;
}

} // namespace ncres
