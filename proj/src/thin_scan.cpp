#include "ncres/annihilators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncres {

namespace {

struct ScanTables {
    int num_arrows = 0;
    int num_vertices = 0;
    int socle = 0;
    std::uint64_t socle_out = 0;                 // arrows that must be absent
    std::vector<std::uint64_t> vertex_out;       // per vertex, outgoing arrows
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rel_sides;
    std::vector<int> arrow_tail;
};

ScanTables build_tables(const QuiverAlgebra& alg, int socle) {
    const Quiver& q = alg.quiver();
    ScanTables t;
    t.num_arrows = q.num_arrows();
    t.num_vertices = q.num_vertices();
    t.socle = socle;
    t.vertex_out.assign(size_t(q.num_vertices()), 0);
    for (int a = 0; a < q.num_arrows(); ++a) {
        t.vertex_out[size_t(q.arrow(a).tail)] |= std::uint64_t(1) << a;
        t.arrow_tail.push_back(q.arrow(a).tail);
    }
    t.socle_out = t.vertex_out[size_t(socle)];
    for (const auto& rel : alg.relations) {
        if (rel.terms.size() != 2)
            throw std::domain_error("scan_thin_supports: binomial relations required");
        if (!(-rel.terms[1].coef / rel.terms[0].coef == Rational(1)))
            throw std::domain_error("scan_thin_supports: unit coefficient ratios required");
        std::uint64_t s1 = 0, s2 = 0;
        for (int a : rel.terms[0].path.arrows()) s1 |= std::uint64_t(1) << a;
        for (int a : rel.terms[1].path.arrows()) s2 |= std::uint64_t(1) << a;
        t.rel_sides.emplace_back(s1, s2);
    }
    return t;
}

} // namespace

std::vector<std::uint64_t> scan_thin_supports(const QuiverAlgebra& alg, int socle,
                                              Execution exec) {
    const Quiver& q = alg.quiver();
    int n = q.num_arrows();
    if (n > 26)
        throw std::domain_error("scan_thin_supports: arrow count capped at 26");
    ScanTables t = build_tables(alg, socle);
    std::vector<int> arrow_head(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) arrow_head[size_t(a)] = q.arrow(a).head;

    // enumerate subsets of the arrows outside the socle's out-set
    std::vector<int> free_arrows;
    for (int a = 0; a < n; ++a)
        if (!(t.socle_out >> a & 1)) free_arrows.push_back(a);
    int nf = int(free_arrows.size());
    std::uint64_t total = std::uint64_t(1) << nf;

    auto expand = [&](std::uint64_t bits) {
        std::uint64_t mask = 0;
        for (int i = 0; i < nf; ++i)
            if (bits >> i & 1) mask |= std::uint64_t(1) << free_arrows[size_t(i)];
        return mask;
    };
    auto test = [&](std::uint64_t mask) {
        for (int v = 0; v < t.num_vertices; ++v) {
            if (v == t.socle) continue;
            if (!(mask & t.vertex_out[size_t(v)])) return false;
        }
        for (const auto& [s1, s2] : t.rel_sides)
            if (((mask & s1) == s1) != ((mask & s2) == s2)) return false;
        // every vertex reaches the socle
        std::uint64_t reached = std::uint64_t(1) << t.socle;
        bool grew = true;
        while (grew) {
            grew = false;
            std::uint64_t m = mask;
            while (m) {
                int a = std::countr_zero(m);
                m &= m - 1;
                int tail = t.arrow_tail[size_t(a)], head = arrow_head[size_t(a)];
                if ((reached >> head & 1) && !(reached >> tail & 1)) {
                    reached |= std::uint64_t(1) << tail;
                    grew = true;
                }
            }
        }
        return std::popcount(reached) == t.num_vertices;
    };

    std::vector<std::uint64_t> result;
    if (exec == Execution::serial) {
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            std::uint64_t mask = expand(bits);
            if (test(mask)) result.push_back(mask);
        }
    } else {
#ifdef _OPENMP
        int threads = omp_get_max_threads();
#else
        int threads = 1;
#endif
        std::vector<std::vector<std::uint64_t>> partial(static_cast<size_t>(threads));
#pragma omp parallel for schedule(static)
        for (long long bits = 0; bits < (long long)total; ++bits) {
#ifdef _OPENMP
            int tid = omp_get_thread_num();
#else
            int tid = 0;
#endif
            std::uint64_t mask = expand(std::uint64_t(bits));
            if (test(mask)) partial[size_t(tid)].push_back(mask);
        }
        for (auto& p : partial) result.insert(result.end(), p.begin(), p.end());
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace ncres
