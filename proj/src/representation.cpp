#include "ncres/representation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ncres {

Subquiver ThinRep::support() const {
    std::uint64_t m = 0;
    for (size_t a = 0; a < values.size(); ++a)
        if (!values[a].is_zero()) m |= std::uint64_t(1) << a;
    return Subquiver(&algebra->quiver(), m);
}

RepQ ThinRep::to_rep() const {
    RepQ r;
    r.algebra = algebra;
    r.dim.assign(size_t(algebra->quiver().num_vertices()), 1);
    for (size_t a = 0; a < values.size(); ++a) {
        MatQ m(1, 1);
        m(0, 0) = values[a];
        r.mats.push_back(m);
    }
    return r;
}

ThinRep ThinRep::all_ones(const QuiverAlgebra& alg, const Subquiver& support) {
    ThinRep t;
    t.algebra = &alg;
    t.values.assign(size_t(alg.quiver().num_arrows()), Rational(0));
    for (int a = 0; a < alg.quiver().num_arrows(); ++a)
        if (support.contains(a)) t.values[size_t(a)] = Rational(1);
    return t;
}

template <class T>
Matrix<T> evaluate_path(const BasicRep<T>& rep, const Path& p) {
    const Quiver& q = rep.quiver();
    if (p.is_trivial()) {
        int d = rep.dim[size_t(p.head())];
        return Matrix<T>::identity(d);
    }
    Matrix<T> acc = rep.mats[size_t(p.arrows().front())];
    for (size_t i = 1; i < p.arrows().size(); ++i)
        acc = rep.mats[size_t(p.arrows()[i])] * acc;
    (void)q;
    return acc;
}

template Matrix<Rational> evaluate_path(const RepQ&, const Path&);
template Matrix<Poly> evaluate_path(const RepP&, const Path&);

template <class T>
std::vector<Relation> check_relations(const BasicRep<T>& rep) {
    std::vector<Relation> bad;
    for (const auto& rel : rep.algebra->relations) {
        Matrix<T> acc(rep.dim[size_t(rel.head())], rep.dim[size_t(rel.tail())]);
        for (const auto& term : rel.terms) {
            Matrix<T> m = evaluate_path(rep, term.path);
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) {
                    T scaled = m(i, j);
                    scaled *= term.coef;
                    acc(i, j) += scaled;
                }
        }
        if (!acc.is_zero()) bad.push_back(rel);
    }
    return bad;
}

template std::vector<Relation> check_relations(const RepQ&);
template std::vector<Relation> check_relations(const RepP&);

namespace {

template <class T, class RankFn>
SocleTopReport socle_top_impl(const BasicRep<T>& rep, RankFn rank_of) {
    SocleTopReport rpt;
    const Quiver& q = rep.quiver();
    for (int v = 0; v < q.num_vertices(); ++v) {
        int dv = rep.dim[size_t(v)];
        if (dv == 0) continue;
        // socle: kernel of stacked arrows with tail v
        int rows = 0;
        for (int a : q.arrows_from(v)) rows += rep.dim[size_t(q.arrow(a).head)];
        Matrix<T> stacked(rows, dv);
        int r0 = 0;
        for (int a : q.arrows_from(v)) {
            const auto& m = rep.mats[size_t(a)];
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < dv; ++j) stacked(r0 + i, j) = m(i, j);
            r0 += m.rows();
        }
        int soc = dv - rank_of(stacked);
        if (soc > 0) rpt.socle[v] = soc;
        // top: cokernel of concatenated arrows with head v
        int cols = 0;
        for (int a : q.arrows_into(v)) cols += rep.dim[size_t(q.arrow(a).tail)];
        Matrix<T> cat(dv, cols);
        int c0 = 0;
        for (int a : q.arrows_into(v)) {
            const auto& m = rep.mats[size_t(a)];
            for (int i = 0; i < dv; ++i)
                for (int j = 0; j < m.cols(); ++j) cat(i, c0 + j) = m(i, j);
            c0 += m.cols();
        }
        int top = dv - rank_of(cat);
        if (top > 0) rpt.top[v] = top;
    }
    return rpt;
}

} // namespace

SocleTopReport socle_top(const RepQ& rep) {
    return socle_top_impl(rep, [](const MatQ& m) { return rank(m); });
}

SocleTopReport socle_top_symbolic(const RepP& rep) {
    return socle_top_impl(rep, [](const MatP& m) {
        Matrix<PolyFrac> f(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) f(i, j) = PolyFrac(m(i, j));
        return rank(f);
    });
}

std::vector<std::vector<int>> thin_terminal_sccs(const ThinRep& rep) {
    const Quiver& q = rep.algebra->quiver();
    int n = q.num_vertices();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int a = 0; a < q.num_arrows(); ++a)
        if (!rep.values[size_t(a)].is_zero())
            adj[size_t(q.arrow(a).tail)].push_back(q.arrow(a).head);
    // iterative Tarjan
    std::vector<int> index(size_t(n), -1), low(size_t(n), 0), comp(size_t(n), -1);
    std::vector<bool> onstk(size_t(n), false);
    std::vector<int> stk;
    std::vector<std::vector<int>> sccs;
    int counter = 0;
    std::function<void(int)> strong = [&](int v) {
        index[size_t(v)] = low[size_t(v)] = counter++;
        stk.push_back(v);
        onstk[size_t(v)] = true;
        for (int w : adj[size_t(v)]) {
            if (index[size_t(w)] < 0) {
                strong(w);
                low[size_t(v)] = std::min(low[size_t(v)], low[size_t(w)]);
            } else if (onstk[size_t(w)]) {
                low[size_t(v)] = std::min(low[size_t(v)], index[size_t(w)]);
            }
        }
        if (low[size_t(v)] == index[size_t(v)]) {
            std::vector<int> c;
            while (true) {
                int w = stk.back();
                stk.pop_back();
                onstk[size_t(w)] = false;
                comp[size_t(w)] = int(sccs.size());
                c.push_back(w);
                if (w == v) break;
            }
            std::sort(c.begin(), c.end());
            sccs.push_back(std::move(c));
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[size_t(v)] < 0) strong(v);
    std::vector<bool> terminal(sccs.size(), true);
    for (int a = 0; a < q.num_arrows(); ++a) {
        if (rep.values[size_t(a)].is_zero()) continue;
        int ct = comp[size_t(q.arrow(a).tail)], ch = comp[size_t(q.arrow(a).head)];
        if (ct != ch) terminal[size_t(ct)] = false;
    }
    std::vector<std::vector<int>> out;
    for (size_t k = 0; k < sccs.size(); ++k)
        if (terminal[k]) out.push_back(sccs[k]);
    std::sort(out.begin(), out.end());
    return out;
}

SocleTopReport thin_socle(const ThinRep& rep) {
    SocleTopReport rpt;
    for (const auto& comp : thin_terminal_sccs(rep))
        for (int v : comp) rpt.socle[v] += 1;
    // top of a thin module: lines with no incoming support arrow, except that
    // initial cycles keep their head lines out of the radical only when the
    // cycle is initial; the kernel formula is used for the nilpotent part.
    SocleTopReport kern = socle_top(rep.to_rep());
    rpt.top = kern.top;
    return rpt;
}

bool is_simple_thin(const ThinRep& rep) {
    auto terminal = thin_terminal_sccs(rep);
    return terminal.size() == 1 &&
           int(terminal[0].size()) == rep.algebra->quiver().num_vertices();
}

bool is_simple(const RepQ& rep) {
    const Quiver& q = rep.quiver();
    for (int d : rep.dim)
        if (d > 1)
            throw std::domain_error(
                "is_simple: generation test requires vertex dimensions <= 1");
    int total = rep.total_dim();
    if (total == 0) return false;
    // basis line per vertex with dim 1
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (rep.dim[size_t(v)] == 0) continue;
        // closure of the coordinate vector at v under arrow action
        std::vector<bool> reached(size_t(q.num_vertices()), false);
        reached[size_t(v)] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < q.num_arrows(); ++a) {
                const Arrow& ar = q.arrow(a);
                if (rep.dim[size_t(ar.tail)] == 0 || rep.dim[size_t(ar.head)] == 0)
                    continue;
                if (reached[size_t(ar.tail)] && !reached[size_t(ar.head)] &&
                    !rep.mats[size_t(a)](0, 0).is_zero()) {
                    reached[size_t(ar.head)] = true;
                    grew = true;
                }
            }
        }
        for (int w = 0; w < q.num_vertices(); ++w)
            if (rep.dim[size_t(w)] == 1 && !reached[size_t(w)]) return false;
    }
    return true;
}

namespace {

template <class T>
PulledApart pulled_apart_impl(const BasicRep<T>& rep) {
    const Quiver& q = rep.quiver();
    PulledApart pa;
    std::vector<std::vector<int>> line_id(size_t(q.num_vertices()));
    int n = 0;
    for (int v = 0; v < q.num_vertices(); ++v)
        for (int k = 0; k < rep.dim[size_t(v)]; ++k) {
            line_id[size_t(v)].push_back(n++);
            pa.line.emplace_back(v, k);
        }
    pa.quiver = Quiver(n);
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        const auto& m = rep.mats[size_t(a)];
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (m(i, j).is_zero()) continue;
                std::string nm = ar.name + "[" + std::to_string(i) + "," +
                                 std::to_string(j) + "]";
                pa.quiver.add_arrow(line_id[size_t(ar.tail)][size_t(j)],
                                    line_id[size_t(ar.head)][size_t(i)], nm);
                pa.arrow_origin.push_back(a);
            }
    }
    return pa;
}

} // namespace

PulledApart pulled_apart(const RepQ& rep) { return pulled_apart_impl(rep); }
PulledApart pulled_apart(const RepP& rep) { return pulled_apart_impl(rep); }

ThinRep gauge(const ThinRep& rep, const std::vector<Rational>& g) {
    const Quiver& q = rep.algebra->quiver();
    ThinRep out = rep;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        out.values[size_t(a)] =
            g[size_t(ar.head)] * rep.values[size_t(a)] / g[size_t(ar.tail)];
    }
    return out;
}

std::optional<std::vector<Rational>> iso_test_thin(const ThinRep& a, const ThinRep& b) {
    if (a.algebra != b.algebra)
        throw std::invalid_argument("iso_test_thin: different algebras");
    const Quiver& q = a.algebra->quiver();
    if (!(a.support() == b.support())) return std::nullopt;
    int n = q.num_vertices();
    // propagate gauge over a spanning forest of the underlying support graph
    std::vector<Rational> g(size_t(n), Rational(0));
    for (int root = 0; root < n; ++root) {
        if (!g[size_t(root)].is_zero()) continue;
        g[size_t(root)] = Rational(1);
        std::vector<int> stack = {root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int arr = 0; arr < q.num_arrows(); ++arr) {
                if (a.values[size_t(arr)].is_zero()) continue;
                const Arrow& ar = q.arrow(arr);
                if (ar.tail == v && g[size_t(ar.head)].is_zero()) {
                    // g_h * a = b * g_t  =>  g_h = b/a * g_t
                    g[size_t(ar.head)] =
                        b.values[size_t(arr)] / a.values[size_t(arr)] * g[size_t(v)];
                    stack.push_back(ar.head);
                } else if (ar.head == v && g[size_t(ar.tail)].is_zero()) {
                    g[size_t(ar.tail)] =
                        a.values[size_t(arr)] / b.values[size_t(arr)] * g[size_t(v)];
                    stack.push_back(ar.tail);
                }
            }
        }
    }
    ThinRep transformed = gauge(a, g);
    for (size_t arr = 0; arr < a.values.size(); ++arr)
        if (transformed.values[arr] != b.values[arr]) return std::nullopt;
    return g;
}

std::vector<std::vector<MatQ>> intertwiner_space(const RepQ& a, const RepQ& b) {
    if (a.algebra != b.algebra || a.dim != b.dim)
        throw std::invalid_argument("intertwiner_space: shape mismatch");
    const Quiver& q = a.quiver();
    int n = q.num_vertices();
    std::vector<int> offset(size_t(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        offset[size_t(v) + 1] = offset[size_t(v)] + a.dim[size_t(v)] * a.dim[size_t(v)];
    int unknowns = offset[size_t(n)];
    int rows = 0;
    for (int arr = 0; arr < q.num_arrows(); ++arr) {
        const Arrow& ar = q.arrow(arr);
        rows += a.dim[size_t(ar.head)] * a.dim[size_t(ar.tail)];
    }
    MatQ sys(rows, unknowns);
    int row = 0;
    for (int arr = 0; arr < q.num_arrows(); ++arr) {
        const Arrow& ar = q.arrow(arr);
        int dh = a.dim[size_t(ar.head)], dt = a.dim[size_t(ar.tail)];
        const MatQ& A = a.mats[size_t(arr)];
        const MatQ& B = b.mats[size_t(arr)];
        // (g_h A - B g_t)(i,j) = sum_k g_h(i,k) A(k,j) - sum_k B(i,k) g_t(k,j)
        for (int i = 0; i < dh; ++i)
            for (int j = 0; j < dt; ++j) {
                for (int k = 0; k < dh; ++k)
                    sys(row, offset[size_t(ar.head)] + i * dh + k) += A(k, j);
                for (int k = 0; k < dt; ++k)
                    sys(row, offset[size_t(ar.tail)] + k * dt + j) -= B(i, k);
                ++row;
            }
    }
    auto basis = kernel_basis(sys);
    std::vector<std::vector<MatQ>> out;
    for (const auto& vec : basis) {
        std::vector<MatQ> blocks;
        for (int v = 0; v < n; ++v) {
            int d = a.dim[size_t(v)];
            MatQ m(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    m(i, j) = vec[size_t(offset[size_t(v)] + i * d + j)];
            blocks.push_back(std::move(m));
        }
        out.push_back(std::move(blocks));
    }
    return out;
}

namespace {

bool blocks_invertible(const std::vector<MatQ>& blocks) {
    for (const auto& m : blocks) {
        if (m.rows() == 0) continue;
        if (det(m).is_zero()) return false;
    }
    return true;
}

std::vector<MatQ> combine(const std::vector<std::vector<MatQ>>& basis,
                          const std::vector<Rational>& coef) {
    std::vector<MatQ> out = basis[0];
    for (auto& m : out)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) *= coef[0];
    for (size_t k = 1; k < basis.size(); ++k)
        for (size_t b = 0; b < out.size(); ++b)
            for (int i = 0; i < out[b].rows(); ++i)
                for (int j = 0; j < out[b].cols(); ++j)
                    out[b](i, j) += coef[k] * basis[k][b](i, j);
    return out;
}

} // namespace

std::optional<std::vector<MatQ>> iso_test(const RepQ& a, const RepQ& b) {
    if (a.algebra != b.algebra)
        throw std::invalid_argument("iso_test: different algebras");
    if (a.dim != b.dim)
        throw std::invalid_argument("iso_test: dimension vectors differ");
    auto basis = intertwiner_space(a, b);
    if (basis.empty()) return std::nullopt;
    size_t k = basis.size();
    // deterministic sample points, two before the symbolic fallback
    std::vector<std::vector<Rational>> samples;
    {
        std::vector<Rational> s1(k), s2(k);
        for (size_t i = 0; i < k; ++i) {
            s1[i] = Rational(static_cast<long long>(i) + 1);
            s2[i] = Rational((static_cast<long long>(i) + 1) * (static_cast<long long>(i) + 1));
        }
        samples.push_back(s1);
        samples.push_back(s2);
    }
    for (const auto& s : samples) {
        auto cand = combine(basis, s);
        if (blocks_invertible(cand)) return cand;
    }
    // symbolic determinant of a generic combination
    int n = int(basis[0].size());
    std::vector<Poly> dets;
    for (int v = 0; v < n; ++v) {
        int d = basis[0][size_t(v)].rows();
        if (d == 0) continue;
        MatP m(d, d);
        for (size_t t = 0; t < k; ++t) {
            Poly x = Poly::var("c" + std::to_string(t));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Poly entry = x;
                    entry *= basis[t][size_t(v)](i, j);
                    m(i, j) += entry;
                }
        }
        Matrix<PolyFrac> mf(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) mf(i, j) = PolyFrac(m(i, j));
        PolyFrac dp = det(mf);
        if (dp.is_zero()) return std::nullopt;  // identically singular block
        dets.push_back(dp.num);
    }
    // all block determinants are nonzero polynomials: search a small grid
    std::vector<long long> grid = {1, 2, 3, 5, 7, 11, 13, 17};
    std::vector<size_t> idx(k, 0);
    while (true) {
        std::vector<Rational> s(k);
        std::map<std::string, Rational> pt;
        for (size_t i = 0; i < k; ++i) {
            s[i] = Rational(grid[idx[i]]);
            pt["c" + std::to_string(i)] = s[i];
        }
        bool ok = true;
        for (const auto& d : dets)
            if (d.eval(pt).is_zero()) { ok = false; break; }
        if (ok) {
            auto cand = combine(basis, s);
            if (blocks_invertible(cand)) return cand;
        }
        size_t pos = 0;
        while (pos < k && ++idx[pos] == grid.size()) idx[pos++] = 0;
        if (pos == k) break;
    }
    return std::nullopt;
}

RepQ direct_sum(const RepQ& a, const RepQ& b) {
    if (a.algebra != b.algebra)
        throw std::invalid_argument("direct_sum: different algebras");
    const Quiver& q = a.quiver();
    RepQ r;
    r.algebra = a.algebra;
    r.dim.resize(a.dim.size());
    for (size_t v = 0; v < a.dim.size(); ++v) r.dim[v] = a.dim[v] + b.dim[v];
    for (int arr = 0; arr < q.num_arrows(); ++arr) {
        const Arrow& ar = q.arrow(arr);
        int dh = r.dim[size_t(ar.head)], dt = r.dim[size_t(ar.tail)];
        MatQ m(dh, dt);
        const MatQ& A = a.mats[size_t(arr)];
        const MatQ& B = b.mats[size_t(arr)];
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < A.cols(); ++j) m(i, j) = A(i, j);
        for (int i = 0; i < B.rows(); ++i)
            for (int j = 0; j < B.cols(); ++j)
                m(A.rows() + i, A.cols() + j) = B(i, j);
        r.mats.push_back(std::move(m));
    }
    return r;
}

RepQ eval_rep(const RepP& rep, const std::map<std::string, Rational>& point) {
    RepQ r;
    r.algebra = rep.algebra;
    r.dim = rep.dim;
    for (const auto& m : rep.mats) {
        MatQ n(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                const Poly& p = m(i, j);
                n(i, j) = p.is_zero() ? Rational(0) : p.eval(point);
            }
        r.mats.push_back(std::move(n));
    }
    return r;
}

} // namespace ncres
