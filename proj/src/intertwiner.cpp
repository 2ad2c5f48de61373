#include "ncres/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ncres {

namespace {

/// sigma with s -> Ls, t -> Mt (M may coincide with L).
Poly scale_params(const Poly& p, const std::string& lam, const std::string& mu) {
    Poly out;
    for (const auto& [expv, coef] : p.terms()) {
        Poly term(coef);
        for (size_t i = 0; i < p.vars().size(); ++i) {
            if (expv[i] == 0) continue;
            const std::string& v = p.vars()[i];
            term *= Poly::var(v).pow(expv[i]);
            if (v == "s") term *= Poly::var(lam).pow(expv[i]);
            if (v == "t") term *= Poly::var(mu).pow(expv[i]);
        }
        out += term;
    }
    return out;
}

struct BlockIndex {
    std::vector<int> offset;
    int total = 0;
};

BlockIndex block_index(const std::vector<int>& dim) {
    BlockIndex bi;
    bi.offset.resize(dim.size() + 1, 0);
    for (size_t v = 0; v < dim.size(); ++v)
        bi.offset[v + 1] = bi.offset[v] + dim[v] * dim[v];
    bi.total = bi.offset[dim.size()];
    return bi;
}

/// Kernel over the fraction field of Q[s,t,L,M], with pivoting that prefers
/// simple entries to keep the polynomial arithmetic small.
std::vector<std::vector<PolyFrac>> kernel_polyfrac(Matrix<PolyFrac> m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int row = 0;
    std::vector<bool> used_col(size_t(cols), false);
    while (row < rows) {
        // choose the (row', col') with the fewest-term nonzero entry among
        // remaining rows and unused columns
        int br = -1, bc = -1;
        size_t best = SIZE_MAX;
        for (int r = row; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                if (used_col[size_t(c)] || m(r, c).is_zero()) continue;
                size_t score = m(r, c).num.num_terms() + m(r, c).den.num_terms();
                if (score < best) { best = score; br = r; bc = c; }
            }
        if (br < 0) break;
        if (br != row)
            for (int c = 0; c < cols; ++c) std::swap(m(br, c), m(row, c));
        PolyFrac inv = field_inv(m(row, bc));
        for (int c = 0; c < cols; ++c) m(row, c) = m(row, c) * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m(r, bc).is_zero()) continue;
            PolyFrac f = m(r, bc);
            for (int c = 0; c < cols; ++c) m(r, c) = m(r, c) - f * m(row, c);
        }
        used_col[size_t(bc)] = true;
        pivot_col.push_back(bc);
        ++row;
    }
    std::vector<std::vector<PolyFrac>> basis;
    for (int free = 0; free < cols; ++free) {
        if (used_col[size_t(free)]) continue;
        std::vector<PolyFrac> v(static_cast<size_t>(cols));
        v[size_t(free)] = PolyFrac(Rational(1));
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[size_t(pivot_col[r])] = PolyFrac() - m(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

ProjectiveCertificate certify_p1_block_chart(const FamilyChart& chart) {
    const QuiverAlgebra& alg = *chart.algebra;
    const Quiver& q = alg.quiver();
    const std::vector<int>& dim = chart.sigma.dim;
    BlockIndex bi = block_index(dim);
    ProjectiveCertificate cert;

    // ---- stage A: independent scalings (s,t) -> (Ls, Mt) ----
    {
        std::vector<std::vector<Poly>> rows;  // coefficients per g-unknown
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(a);
            int dh = dim[size_t(ar.head)], dt = dim[size_t(ar.tail)];
            const MatP& A = chart.sigma.mats[size_t(a)];
            for (int i = 0; i < dh; ++i)
                for (int j = 0; j < dt; ++j) {
                    std::vector<Poly> row(static_cast<size_t>(bi.total));
                    // (g_h A)(i,j) = sum_k g_h(i,k) A(k,j)
                    for (int k = 0; k < dh; ++k)
                        row[size_t(bi.offset[size_t(ar.head)] + i * dh + k)] += A(k, j);
                    // (A' g_t)(i,j) = sum_k A'(i,k) g_t(k,j)
                    for (int k = 0; k < dt; ++k)
                        row[size_t(bi.offset[size_t(ar.tail)] + k * dt + j)] -=
                            scale_params(A(i, k), "L", "M");
                    rows.push_back(std::move(row));
                }
        }
        Matrix<PolyFrac> sys(int(rows.size()), bi.total);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < bi.total; ++c) sys(int(r), c) = PolyFrac(rows[r][size_t(c)]);
        auto basis = kernel_polyfrac(std::move(sys));
        if (basis.empty()) {
            cert.independent_scalings_give_iso = false;
        } else {
            // generic combination: all block determinants must vanish
            // identically for the family to be projective
            bool invertible_possible = true;
            for (size_t v = 0; v < dim.size(); ++v) {
                int d = dim[v];
                if (d == 0) continue;
                Matrix<PolyFrac> blk(d, d);
                for (size_t b = 0; b < basis.size(); ++b) {
                    Poly xb = Poly::var("x" + std::to_string(b));
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j)
                            blk(i, j) += PolyFrac(xb) *
                                         basis[b][size_t(bi.offset[v] + i * d + j)];
                }
                if (det(blk).is_zero()) { invertible_possible = false; break; }
            }
            cert.independent_scalings_give_iso = invertible_possible;
        }
    }

    // ---- stage B: tied scaling (s,t) -> (Ls, Lt), solved identically in
    // (s,t) with g entries in Q(lambda) ----
    {
        // per (s,t)-monomial, a linear equation over Q[lambda]
        std::vector<std::vector<UniPoly>> rows;
        auto st_degrees = [](const Poly& p, const std::vector<int>& expv) {
            int ds = 0, dt = 0;
            for (size_t i = 0; i < p.vars().size(); ++i) {
                if (p.vars()[i] == "s") ds = expv[i];
                if (p.vars()[i] == "t") dt = expv[i];
            }
            return std::make_pair(ds, dt);
        };
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(a);
            int dh = dim[size_t(ar.head)], dt_ = dim[size_t(ar.tail)];
            const MatP& A = chart.sigma.mats[size_t(a)];
            for (int i = 0; i < dh; ++i)
                for (int j = 0; j < dt_; ++j) {
                    // coefficient of each (s,t)-monomial, per unknown
                    std::map<std::pair<int, int>, std::vector<UniPoly>> by_mono;
                    auto add = [&](int unknown, const Poly& coef, bool lambda_scaled,
                                   bool negate) {
                        for (const auto& [expv, c] : coef.terms()) {
                            auto key = st_degrees(coef, expv);
                            auto& row = by_mono[key];
                            if (row.empty())
                                row.assign(size_t(bi.total), UniPoly());
                            int lam_pow = lambda_scaled ? key.first + key.second : 0;
                            std::vector<Rational> uc(size_t(lam_pow) + 1, Rational(0));
                            uc[size_t(lam_pow)] = negate ? -c : c;
                            row[size_t(unknown)] =
                                row[size_t(unknown)] + UniPoly(std::move(uc));
                        }
                    };
                    for (int k = 0; k < dh; ++k)
                        add(bi.offset[size_t(ar.head)] + i * dh + k, A(k, j), false,
                            false);
                    for (int k = 0; k < dt_; ++k)
                        add(bi.offset[size_t(ar.tail)] + k * dt_ + j, A(i, k), true,
                            true);
                    for (auto& [key, row] : by_mono) rows.push_back(std::move(row));
                }
        }
        MatR sys(int(rows.size()), bi.total);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < bi.total; ++c)
                sys(int(r), c) = UniRat(rows[r][size_t(c)], UniPoly(Rational(1)));
        auto basis = kernel_basis(sys);
        if (basis.size() == 1) {
            // invertibility of every block
            bool ok = true;
            std::vector<MatR> blocks;
            for (size_t v = 0; v < dim.size(); ++v) {
                int d = dim[v];
                MatR blk(d, d);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        blk(i, j) = basis[0][size_t(bi.offset[v] + i * d + j)];
                if (d > 0 && det(blk).is_zero()) ok = false;
                blocks.push_back(std::move(blk));
            }
            cert.tied_scaling_gives_iso = ok;
            if (ok) cert.phi = std::move(blocks);
        } else if (basis.size() > 1) {
            // more isomorphisms than a 1-dimensional-socle family allows
            cert.tied_scaling_gives_iso = true;
            cert.detail = "intertwiner space dimension " + std::to_string(basis.size());
            // pick a generic invertible combination
            std::vector<MatR> blocks;
            for (size_t v = 0; v < dim.size(); ++v) {
                int d = dim[v];
                MatR blk(d, d);
                for (size_t b = 0; b < basis.size(); ++b)
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j)
                            blk(i, j) += UniRat(Rational(static_cast<long long>(b) + 1)) *
                                         basis[b][size_t(bi.offset[v] + i * d + j)];
                blocks.push_back(std::move(blk));
            }
            cert.phi = std::move(blocks);
        }
    }
    if (cert.detail.empty())
        cert.detail = cert.tied_scaling_gives_iso && !cert.independent_scalings_give_iso
                          ? "lambda = mu"
                          : "not a projective family";
    return cert;
}

namespace {

/// Converts the Q(lambda) blocks to Laurent blocks by clearing the common
/// denominator (an overall scalar does not change the shrink limit).
std::vector<MatL> phi_to_laurent(const std::vector<MatR>& phi) {
    UniPoly common(Rational(1));
    for (const auto& blk : phi)
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j) {
                const UniPoly& den = blk(i, j).den();
                // common := lcm(common, den)
                UniPoly g = UniPoly::gcd(common, den);
                UniPoly q, r;
                UniPoly::divmod(den, g, q, r);
                common = common * q;
            }
    std::vector<MatL> out;
    for (const auto& blk : phi) {
        MatL l(blk.rows(), blk.cols());
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j) {
                if (blk(i, j).is_zero()) continue;
                UniPoly q, r;
                UniPoly::divmod(common, blk(i, j).den(), q, r);
                UniPoly num = blk(i, j).num() * q;
                Laurent acc;
                for (size_t k = 0; k < num.coeffs().size(); ++k) {
                    if (num.coeffs()[k].is_zero()) continue;
                    acc += Laurent::lambda_power(int(k))
                               .scaled(num.coeffs()[k]);
                }
                l(i, j) = acc;
            }
        out.push_back(std::move(l));
    }
    return out;
}

} // namespace

ShrinkResult shrink_block_chart(const FamilyChart& chart,
                                const ProjectiveCertificate& cert) {
    if (cert.phi.empty())
        throw std::domain_error("shrink_block_chart: no isomorphism available");
    const QuiverAlgebra& alg = *chart.algebra;
    const Quiver& q = alg.quiver();
    ShrinkResult res;
    res.phi_lambda = phi_to_laurent(cert.phi);
    // minimal lambda power across all entries
    bool first = true;
    int m = 0;
    for (const auto& blk : res.phi_lambda)
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j) {
                if (blk(i, j).is_zero()) continue;
                int v = blk(i, j).min_power();
                m = first ? v : std::min(m, v);
                first = false;
            }
    res.min_power = m;
    // phi_0 blocks
    std::vector<MatQ> phi0;
    for (const auto& blk : res.phi_lambda) {
        MatQ p0(blk.rows(), blk.cols());
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j) {
                if (blk(i, j).is_zero()) continue;
                Poly c = blk(i, j).coeff(m);
                if (!c.is_zero()) p0(i, j) = c.constant_value();
            }
        phi0.push_back(std::move(p0));
    }
    // V_z / ker phi_0 at a parameter point z, via the induced action on a
    // complement of the kernel
    auto quotient_at = [&](const std::vector<Rational>& z) {
        RepQ at = chart.at(z);
        // kernel basis and complement (coordinate) basis per vertex
        std::vector<std::vector<std::vector<Rational>>> kerb(phi0.size());
        std::vector<std::vector<int>> comp_coords(phi0.size());
        for (size_t v = 0; v < phi0.size(); ++v) {
            MatQ k = phi0[v];
            auto basis = kernel_basis(k);
            kerb[v] = basis;
            // choose complement coordinates: columns not pivotal in the
            // kernel-spanning matrix
            MatQ kb(int(basis.size()), k.cols());
            for (size_t b = 0; b < basis.size(); ++b)
                for (int c = 0; c < k.cols(); ++c) kb(int(b), c) = basis[b][size_t(c)];
            auto piv = rref(kb);
            std::vector<bool> isp(size_t(k.cols()), false);
            for (int c : piv) isp[size_t(c)] = true;
            for (int c = 0; c < k.cols(); ++c)
                if (!isp[size_t(c)]) comp_coords[v].push_back(c);
        }
        RepQ v0;
        v0.algebra = &alg;
        v0.dim.resize(phi0.size());
        for (size_t v = 0; v < phi0.size(); ++v)
            v0.dim[v] = int(comp_coords[v].size());
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(a);
            int dh = v0.dim[size_t(ar.head)], dt = v0.dim[size_t(ar.tail)];
            MatQ mat(dh, dt);
            // induced map: project sigma_z(a) applied to complement basis
            // vectors back to complement coordinates modulo the kernel
            const auto& kb = kerb[size_t(ar.head)];
            const auto& hc = comp_coords[size_t(ar.head)];
            const auto& tc = comp_coords[size_t(ar.tail)];
            int full_h = chart.sigma.dim[size_t(ar.head)];
            // build reduction matrix once per arrow: columns = kernel basis
            // then complement unit vectors
            MatQ basis_h(full_h, int(kb.size()) + dh);
            for (size_t b = 0; b < kb.size(); ++b)
                for (int i = 0; i < full_h; ++i) basis_h(i, int(b)) = kb[b][size_t(i)];
            for (int c = 0; c < dh; ++c) basis_h(hc[size_t(c)], int(kb.size()) + c) = Rational(1);
            auto inv = inverse(basis_h);
            if (!inv) throw std::logic_error("shrink_block_chart: basis not invertible");
            for (int jt = 0; jt < dt; ++jt) {
                // image of the jt-th complement unit vector at the tail
                std::vector<Rational> img(size_t(full_h), Rational(0));
                for (int i = 0; i < full_h; ++i)
                    img[size_t(i)] = at.mats[size_t(a)](i, tc[size_t(jt)]);
                for (int i = 0; i < dh; ++i) {
                    Rational acc(0);
                    for (int kcol = 0; kcol < full_h; ++kcol)
                        acc += (*inv)(int(kb.size()) + i, kcol) * img[size_t(kcol)];
                    mat(i, jt) = acc;
                }
            }
            v0.mats.push_back(std::move(mat));
        }
        return v0;
    };
    RepQ v0a = quotient_at(chart.generic_point(0));
    RepQ v0b = quotient_at(chart.generic_point(1));
    res.v0_total_dim = v0a.total_dim();
    res.semisimple = true;
    for (const auto& mat : v0a.mats)
        if (!mat.is_zero()) res.semisimple = false;
    if (res.semisimple)
        for (size_t v = 0; v < v0a.dim.size(); ++v)
            if (v0a.dim[v] > 0) res.decomposition[int(v)] += v0a.dim[v];
    res.independence_ok = iso_test(v0a, v0b).has_value();
    res.equals_member_top =
        res.semisimple &&
        socle_top(chart.at(chart.generic_point(0))).top == res.decomposition;
    res.detail = "V0 of total dimension " + std::to_string(res.v0_total_dim);
    return res;
}

} // namespace ncres
