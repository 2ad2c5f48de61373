#pragma once

#include "ncres/algebra.hpp"
#include "ncres/families.hpp"
#include "ncres/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncres {

/// P-annihilator of a module for the path-like set Q_{>=0} u {0}.  Thin
/// modules get an exact complement description (a path is annihilated iff it
/// leaves the support); other modules get the explicit annihilated-path set
/// up to a length bound.
struct PAnnihilatorView {
    enum class Mode { thin_exact, bounded };
    Mode mode = Mode::thin_exact;
    Subquiver support;             // thin_exact: annihilated = paths not inside
    std::vector<Path> annihilated; // bounded mode
    int bound = 0;
    bool bound_caveat = false;     // bounded comparisons are only valid up to bound
};

PAnnihilatorView p_annihilator(const ThinRep& rep);
PAnnihilatorView p_annihilator(const RepQ& rep, std::optional<int> bound = {});

enum class AnnOrder { equal, strictly_contained, strictly_contains, incomparable };
AnnOrder compare_annihilators(const PAnnihilatorView& a, const PAnnihilatorView& b);

/// A support in the chain with a witness path that is annihilated here but
/// not one step up.
struct ChainStep {
    Subquiver support;
    Path witness;
};

struct AlmostLargeRecord {
    Subquiver support;
    int ell = 0;                  // chain position
    int socle_vertex = 0;
    int moduli_dim = 0;
    std::vector<ChainStep> chain; // from just below the full quiver down to here
    std::optional<FamilyChart> family;
    bool chain_length_unique = true;
};

/// Exhaustive thin classification: scans all supports (two execution paths,
/// serial and OpenMP, bit-identical results).
enum class Execution { serial, parallel };

/// Valid supports with the requested socle among all 2^|Q1| arrow subsets:
/// relation pattern both-or-neither, multiplicative solvability, socle vertex
/// a sink that every vertex reaches.
std::vector<std::uint64_t> scan_thin_supports(const QuiverAlgebra& alg, int socle,
                                              Execution exec);

/// All relation-pattern-valid supports inside the interval [lo, hi], found by
/// constraint-propagating DFS (no 2^n sweep).
std::vector<std::uint64_t> valid_supports_in_interval(const QuiverAlgebra& alg,
                                                      std::uint64_t lo,
                                                      std::uint64_t hi);

/// Chain positions ell for a candidate support: lengths of maximal chains of
/// valid supports from the full quiver down to it.
std::vector<int> chain_positions(const QuiverAlgebra& alg, std::uint64_t support);

std::vector<AlmostLargeRecord> classify_almost_large(const QuiverAlgebra& alg,
                                                     int socle, bool thin_only,
                                                     Execution exec = Execution::parallel,
                                                     bool build_charts = true);

/// Direct lattice construction of the cyclic l=1 families (no brute force).
struct CyclicSupportTriple {
    int n = 0, m = 0;          // staircase lattice point (n, m)
    int source = 0;            // j = t(p) = t(q)
    Subquiver q_m;             // Q^m
    Subquiver q_m_tilde;       // supporting subquiver of the P^1-family
    Subquiver q_m_a;           // x-coordinate-vanishing l=2 support
    Subquiver q_m_b;           // y-coordinate-vanishing l=2 support
    Path p_path, q_path;       // tau-labels x^m and y^n
};
std::vector<CyclicSupportTriple> cyclic_supports(const QuiverAlgebra& alg, int socle);

} // namespace ncres
