#include "ncres/geometry.hpp"

#include <algorithm>
#include <bit>

namespace ncres {

namespace {

struct MatchState {
    std::uint64_t chosen = 0;
    size_t next_term = 0;
};

/// Backtracking over the terms in order; every term must be met exactly once.
void match_dfs(const std::vector<std::uint64_t>& terms,
               const std::vector<std::vector<size_t>>& terms_of_arrow,
               std::vector<int>& coverage, std::uint64_t chosen, size_t k,
               std::vector<std::uint64_t>& out) {
    while (k < terms.size() && coverage[k] == 1) ++k;
    if (k < terms.size() && coverage[k] > 1) return;
    if (k == terms.size()) {
        out.push_back(chosen);
        return;
    }
    std::uint64_t cand = terms[k];
    while (cand) {
        int a = std::countr_zero(cand);
        cand &= cand - 1;
        bool ok = true;
        for (size_t t : terms_of_arrow[size_t(a)])
            if (coverage[t] >= 1) { ok = false; break; }
        if (!ok) continue;
        for (size_t t : terms_of_arrow[size_t(a)]) ++coverage[t];
        match_dfs(terms, terms_of_arrow, coverage, chosen | (std::uint64_t(1) << a),
                  k, out);
        for (size_t t : terms_of_arrow[size_t(a)]) --coverage[t];
    }
}

} // namespace

std::vector<std::uint64_t> perfect_matchings(const QuiverAlgebra& alg, Execution exec) {
    auto terms = su3_superpotential_terms(alg);
    std::sort(terms.begin(), terms.end());
    int num_arrows = alg.quiver().num_arrows();
    std::vector<std::vector<size_t>> terms_of_arrow(static_cast<size_t>(num_arrows));
    for (size_t t = 0; t < terms.size(); ++t) {
        std::uint64_t m = terms[t];
        while (m) {
            int a = std::countr_zero(m);
            m &= m - 1;
            terms_of_arrow[size_t(a)].push_back(t);
        }
    }
    std::vector<std::uint64_t> result;
    if (exec == Execution::serial) {
        std::vector<int> coverage(terms.size(), 0);
        match_dfs(terms, terms_of_arrow, coverage, 0, 0, result);
    } else {
        // expand the first few decision levels serially, then solve the
        // frontier states in parallel
        struct Frontier {
            std::uint64_t chosen;
            std::vector<int> coverage;
        };
        std::vector<Frontier> frontier = {{0, std::vector<int>(terms.size(), 0)}};
        const int depth = 4;
        for (int d = 0; d < depth; ++d) {
            std::vector<Frontier> next;
            for (auto& f : frontier) {
                size_t k = 0;
                while (k < terms.size() && f.coverage[k] == 1) ++k;
                if (k == terms.size() || f.coverage[k] > 1) {
                    next.push_back(f);
                    continue;
                }
                std::uint64_t cand = terms[k];
                while (cand) {
                    int a = std::countr_zero(cand);
                    cand &= cand - 1;
                    bool ok = true;
                    for (size_t t : terms_of_arrow[size_t(a)])
                        if (f.coverage[t] >= 1) { ok = false; break; }
                    if (!ok) continue;
                    Frontier g = f;
                    g.chosen |= std::uint64_t(1) << a;
                    for (size_t t : terms_of_arrow[size_t(a)]) ++g.coverage[t];
                    next.push_back(std::move(g));
                }
            }
            frontier = std::move(next);
        }
        std::vector<std::vector<std::uint64_t>> partial(frontier.size());
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < (long long)frontier.size(); ++i) {
            auto cov = frontier[size_t(i)].coverage;
            match_dfs(terms, terms_of_arrow, cov, frontier[size_t(i)].chosen, 0,
                      partial[size_t(i)]);
        }
        for (auto& p : partial) result.insert(result.end(), p.begin(), p.end());
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

} // namespace ncres
