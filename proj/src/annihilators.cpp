#include "ncres/annihilators.hpp"

#include "ncres/catalog.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncres {

PAnnihilatorView p_annihilator(const ThinRep& rep) {
    PAnnihilatorView v;
    v.mode = PAnnihilatorView::Mode::thin_exact;
    v.support = rep.support();
    return v;
}

PAnnihilatorView p_annihilator(const RepQ& rep, std::optional<int> bound) {
    PAnnihilatorView v;
    v.mode = PAnnihilatorView::Mode::bounded;
    v.bound = bound.value_or(rep.total_dim());
    v.bound_caveat = true;
    const Quiver& q = rep.quiver();
    for (const Path& p : enumerate_paths(q, {}, {}, v.bound)) {
        MatQ m = evaluate_path(rep, p);
        if (m.is_zero()) v.annihilated.push_back(p);
    }
    return v;
}

AnnOrder compare_annihilators(const PAnnihilatorView& a, const PAnnihilatorView& b) {
    if (a.mode != b.mode)
        throw std::invalid_argument("compare_annihilators: mixed modes");
    if (a.mode == PAnnihilatorView::Mode::thin_exact) {
        // ann(a) <= ann(b)  iff  supp(b) <= supp(a)
        bool ab = b.support.subset_of(a.support);
        bool ba = a.support.subset_of(b.support);
        if (ab && ba) return AnnOrder::equal;
        if (ab) return AnnOrder::strictly_contained;
        if (ba) return AnnOrder::strictly_contains;
        return AnnOrder::incomparable;
    }
    if (a.bound != b.bound)
        throw std::invalid_argument("compare_annihilators: different bounds");
    auto leq = [](const std::vector<Path>& x, const std::vector<Path>& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    bool ab = leq(a.annihilated, b.annihilated);
    bool ba = leq(b.annihilated, a.annihilated);
    if (ab && ba) return AnnOrder::equal;
    if (ab) return AnnOrder::strictly_contained;
    if (ba) return AnnOrder::strictly_contains;
    return AnnOrder::incomparable;
}

namespace {

struct RelationMasks {
    std::uint64_t side1 = 0, side2 = 0;
};

std::vector<RelationMasks> relation_masks(const QuiverAlgebra& alg) {
    std::vector<RelationMasks> rm;
    for (const auto& rel : alg.relations) {
        if (rel.terms.size() != 2)
            throw std::domain_error(
                "thin support analysis requires binomial relations");
        Rational ratio = -rel.terms[1].coef / rel.terms[0].coef;
        if (!(ratio == Rational(1)))
            throw std::domain_error(
                "thin support analysis requires unit coefficient ratios");
        RelationMasks m;
        for (int a : rel.terms[0].path.arrows()) m.side1 |= std::uint64_t(1) << a;
        for (int a : rel.terms[1].path.arrows()) m.side2 |= std::uint64_t(1) << a;
        rm.push_back(m);
    }
    return rm;
}

} // namespace

std::vector<std::uint64_t> valid_supports_in_interval(const QuiverAlgebra& alg,
                                                      std::uint64_t lo,
                                                      std::uint64_t hi) {
    auto rels = relation_masks(alg);
    int n = alg.quiver().num_arrows();
    std::vector<std::uint64_t> out;
    // state: in-mask, excluded-mask; undecided = hi & ~in & ~ex
    std::function<void(std::uint64_t, std::uint64_t)> dfs =
        [&](std::uint64_t in, std::uint64_t ex) {
            // propagate: a fully-in side forces the other side in; an
            // excluded arrow in one side with the other side fully in is a
            // contradiction unless the other side also gets broken
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& r : rels) {
                    for (int flip = 0; flip < 2; ++flip) {
                        std::uint64_t s1 = flip ? r.side2 : r.side1;
                        std::uint64_t s2 = flip ? r.side1 : r.side2;
                        if ((s1 & ~in) != 0) continue;  // side1 not fully in
                        std::uint64_t missing = s2 & ~in;
                        if (missing & ex) return;  // contradiction
                        if (missing) {
                            in |= missing;
                            if (in & ~hi) return;  // left the interval
                            changed = true;
                        }
                    }
                }
            }
            std::uint64_t undecided = hi & ~in & ~ex;
            if (!undecided) {
                for (const auto& r : rels)
                    if (((r.side1 & ~in) == 0) != ((r.side2 & ~in) == 0)) return;
                out.push_back(in);
                return;
            }
            int a = std::countr_zero(undecided);
            dfs(in | (std::uint64_t(1) << a), ex);
            dfs(in, ex | (std::uint64_t(1) << a));
        };
    (void)n;
    dfs(lo, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> chain_positions(const QuiverAlgebra& alg, std::uint64_t support) {
    std::uint64_t full = Subquiver::full(alg.quiver()).mask();
    auto interval = valid_supports_in_interval(alg, support, full);
    // saturated chains from full down to support in the containment poset
    std::set<std::uint64_t> pool(interval.begin(), interval.end());
    pool.insert(full);
    std::map<std::uint64_t, std::set<int>> memo;  // lengths of saturated chains up to full
    std::function<const std::set<int>&(std::uint64_t)> up = [&](std::uint64_t s)
        -> const std::set<int>& {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        std::set<int> res;
        if (s == full) {
            res.insert(0);
        } else {
            // covers of s: minimal strict supersets within the pool
            std::vector<std::uint64_t> ups;
            for (std::uint64_t t : pool)
                if (t != s && (s & ~t) == 0) ups.push_back(t);
            for (std::uint64_t t : ups) {
                bool cover = true;
                for (std::uint64_t w : ups)
                    if (w != t && (w & ~t) == 0) { cover = false; break; }
                if (!cover) continue;
                for (int len : up(t)) res.insert(len + 1);
            }
        }
        return memo.emplace(s, std::move(res)).first->second;
    };
    const auto& lens = up(support);
    return std::vector<int>(lens.begin(), lens.end());
}

namespace {

int support_moduli_dim(const QuiverAlgebra& alg, std::uint64_t mask) {
    const Quiver& q = alg.quiver();
    std::vector<int> arrows;
    for (int a = 0; a < q.num_arrows(); ++a)
        if (mask >> a & 1) arrows.push_back(a);
    std::map<int, int> idx;
    for (size_t i = 0; i < arrows.size(); ++i) idx[arrows[i]] = int(i);
    // active relation exponent rows
    std::vector<std::vector<Rational>> rows;
    for (const auto& rel : alg.relations) {
        std::uint64_t s1 = 0, s2 = 0;
        for (int a : rel.terms[0].path.arrows()) s1 |= std::uint64_t(1) << a;
        for (int a : rel.terms[1].path.arrows()) s2 |= std::uint64_t(1) << a;
        if ((s1 & ~mask) || (s2 & ~mask)) continue;
        std::vector<Rational> row(arrows.size(), Rational(0));
        for (int a : rel.terms[0].path.arrows()) row[size_t(idx[a])] += Rational(1);
        for (int a : rel.terms[1].path.arrows()) row[size_t(idx[a])] -= Rational(1);
        rows.push_back(std::move(row));
    }
    MatQ m(int(rows.size()), int(arrows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = rows[i][j];
    int rel_rank = rank(m);
    // gauge rank: vertices minus components of the underlying undirected graph
    int n = q.num_vertices();
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[size_t(x)] != x) {
            parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            x = parent[size_t(x)];
        }
        return x;
    };
    for (int a : arrows) {
        int u = find(q.arrow(a).tail), v = find(q.arrow(a).head);
        if (u != v) parent[size_t(u)] = v;
    }
    std::set<int> comps;
    for (int v = 0; v < n; ++v) comps.insert(find(v));
    int gauge_rank = n - int(comps.size());
    return int(arrows.size()) - rel_rank - gauge_rank;
}

} // namespace

std::vector<AlmostLargeRecord> classify_almost_large(const QuiverAlgebra& alg,
                                                     int socle, bool thin_only,
                                                     Execution exec,
                                                     bool build_charts) {
    if (!thin_only) {
        if (alg.name.rfind("D(", 0) != 0 && alg.name != "E6")
            throw std::domain_error(
                "classify_almost_large: non-thin classification is only "
                "available for the built-in D/E charts");
        std::vector<AlmostLargeRecord> out;
        for (auto& chart : builtin_family_charts(alg, socle)) {
            AlmostLargeRecord rec;
            rec.support = Subquiver::full(alg.quiver());
            rec.ell = 1;  // chain maximality assumed, reported by the verifier
            rec.socle_vertex = socle;
            rec.moduli_dim = 1;
            rec.family = std::move(chart);
            out.push_back(std::move(rec));
        }
        return out;
    }
    if (!alg.expected_thin())
        throw std::domain_error(
            "classify_almost_large: thin search requires dimension vector (1,...,1)");
    if (alg.quiver().num_arrows() > 26)
        throw std::domain_error(
            "classify_almost_large: exhaustive scan capped at 26 arrows");
    auto masks = scan_thin_supports(alg, socle, exec);
    std::vector<AlmostLargeRecord> out;
    std::uint64_t full = Subquiver::full(alg.quiver()).mask();
    for (std::uint64_t mask : masks) {
        if (mask == full) continue;  // simple module, not almost large
        AlmostLargeRecord rec;
        rec.support = Subquiver(&alg.quiver(), mask);
        rec.socle_vertex = socle;
        auto lens = chain_positions(alg, mask);
        if (lens.empty()) continue;
        rec.ell = lens.front();
        rec.chain_length_unique = lens.size() == 1;
        // a witness chain: walk covers downward from full
        {
            auto interval = valid_supports_in_interval(alg, mask, full);
            std::set<std::uint64_t> pool(interval.begin(), interval.end());
            pool.insert(full);
            std::uint64_t cur = full;
            while (cur != mask) {
                // the largest pool element strictly below cur and >= mask
                std::uint64_t next = mask;
                int best_pc = -1;
                for (std::uint64_t t : pool)
                    if (t != cur && (t & ~cur) == 0 && (mask & ~t) == 0) {
                        int pc = std::popcount(t);
                        if (pc > best_pc) { best_pc = pc; next = t; }
                    }
                std::uint64_t lost = cur & ~next;
                int arrow = std::countr_zero(lost);
                ChainStep step;
                step.support = Subquiver(&alg.quiver(), next);
                step.witness = Path(&alg.quiver(), std::vector<int>{arrow});
                rec.chain.push_back(step);
                cur = next;
            }
        }
        rec.moduli_dim = support_moduli_dim(alg, mask);
        if (build_charts && rec.moduli_dim >= 1)
            rec.family = trivialize_support(alg, rec.support, socle);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CyclicSupportTriple> cyclic_supports(const QuiverAlgebra& alg, int socle) {
    // arrows: a_i = i, b_i = r + i by construction of cyclic_mckay_algebra
    const Quiver& q = alg.quiver();
    int r = q.num_vertices();
    int b = q.arrow(q.arrow_id("b0")).head;  // head of b_0 is b mod r
    // relabel so the requested socle plays the role of vertex 0
    auto unshift = [&](int v) { return ((v + socle) % r + r) % r; };
    std::vector<CyclicSupportTriple> out;
    int best = r + 1;
    for (int n = 1; n < r; ++n) {
        int m = (n * b) % r;
        if (m >= best) continue;
        best = m;
        CyclicSupportTriple t;
        t.n = n;
        t.m = m;
        int j = (r - m) % r;  // relative to the socle vertex
        t.source = unshift(j);
        std::uint64_t qm = 0;
        std::vector<int> p_arrows, q_arrows;
        for (int i = j; i <= r - 1; ++i) {
            qm |= std::uint64_t(1) << unshift(i);  // a_{unshift(i)}
            p_arrows.push_back(unshift(i));
        }
        int v = j;
        for (int k = 0; k < n; ++k) {
            qm |= std::uint64_t(1) << (r + unshift(v));
            q_arrows.push_back(r + unshift(v));
            v = (v + b) % r;
        }
        std::set<int> qm_vertices = {0};
        for (int i = j; i <= r - 1; ++i) qm_vertices.insert(i);
        v = j;
        for (int k = 0; k < n; ++k) {
            qm_vertices.insert(v);
            v = (v + b) % r;
        }
        std::uint64_t qt = qm;
        for (int i = 0; i < r; ++i)
            if (!qm_vertices.count(i)) {
                qt |= std::uint64_t(1) << unshift(i);
                qt |= std::uint64_t(1) << (r + unshift(i));
            }
        t.q_m = Subquiver(&q, qm);
        t.q_m_tilde = Subquiver(&q, qt);
        t.p_path = Path(&q, std::vector<int>(p_arrows.begin(), p_arrows.end()));
        t.q_path = Path(&q, std::vector<int>(q_arrows.begin(), q_arrows.end()));
        // alpha: a-arrows with a b-only path from their tail to j inside qt;
        // beta: b-arrows with an a-only path from their tail to j inside qt
        auto reach = [&](bool via_b) {
            std::set<int> ok = {j};
            bool grew = true;
            while (grew) {
                grew = false;
                for (int i = 0; i < r; ++i) {
                    if (ok.count(i)) continue;
                    int arrow = via_b ? (r + unshift(i)) : unshift(i);
                    int head = via_b ? (i + b) % r : (i + 1) % r;
                    if ((qt >> arrow & 1) && ok.count(head)) {
                        ok.insert(i);
                        grew = true;
                    }
                }
            }
            return ok;
        };
        auto breach = reach(true), areach = reach(false);
        std::uint64_t alpha = 0, beta = 0;
        for (int i = 0; i < r; ++i) {
            if ((qt >> unshift(i) & 1) && breach.count(i))
                alpha |= std::uint64_t(1) << unshift(i);
            if ((qt >> (r + unshift(i)) & 1) && areach.count(i))
                beta |= std::uint64_t(1) << (r + unshift(i));
        }
        t.q_m_a = Subquiver(&q, qt & ~alpha);
        t.q_m_b = Subquiver(&q, qt & ~beta);
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace ncres
