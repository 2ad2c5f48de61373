#pragma once

#include "ncres/algebra.hpp"
#include "ncres/linalg.hpp"
#include "ncres/representation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncres {

/// Parametric family of modules: a representation sigma with entries in
/// Q[t1..tm] together with its support data.  For thin charts the support is
/// an arrow subset; built-in pulled-apart charts carry block matrices.
struct FamilyChart {
    const QuiverAlgebra* algebra = nullptr;
    std::string name;
    bool thin = true;
    Subquiver support;                   // meaningful when thin
    int sink = -1;                       // socle vertex
    std::vector<std::string> params;
    RepP sigma;
    std::vector<Poly> coordinates;       // homogeneous coordinates in B-vars
    std::vector<Path> generating_paths;  // paths whose labels give coordinates
    int bold_vertex = -1;                // figure's shrink-target hint, -1 if none

    RepQ at(const std::vector<Rational>& values) const;
    std::map<std::string, Rational> point(const std::vector<Rational>& values) const;
    /// Deterministic generic parameter values (small primes).
    std::vector<Rational> generic_point(int offset = 0) const;
};

struct FamilyVerdict {
    enum class Kind { projective, torus, other };
    Kind kind = Kind::other;
    int moduli_dim = 0;
    /// Basis of the achievable log-scaling directions in parameter space.
    std::vector<std::vector<Rational>> lattice;
    std::string detail;
};

/// Builds a parametric chart on a thin support with the given sink: constants
/// on as many arrows as possible, parameters on the rest, relations holding
/// identically.  Sparse labelings (parameters only on source arrows) are
/// preferred; otherwise an exact lattice construction is used.
FamilyChart trivialize_support(const QuiverAlgebra& alg, const Subquiver& support,
                               int sink);

/// Expresses a relation-valid module supported on the chart as a parameter
/// point z with rep isomorphic to sigma(z).
std::optional<std::vector<Rational>> normalize_to_chart(const ThinRep& rep,
                                                        const FamilyChart& chart);

/// Block-chart variant for inputs given in the chart's basis (the nonzero
/// entry pattern must match sigma's); gauge moves act per basis line.  Charts
/// with non-monomial entries are not handled.
std::optional<std::vector<Rational>> normalize_to_chart(const RepQ& rep,
                                                        const FamilyChart& chart);

/// Solves the isomorphism parameters V_t = V_{lambda t}: returns the scaling
/// lattice and the family verdict (projective iff the lattice is exactly the
/// diagonal line).
FamilyVerdict solve_iso_parameters(const FamilyChart& chart);

struct ShrinkResult {
    std::vector<MatL> phi_lambda;      // per-vertex blocks over Laurent
    int min_power = 0;
    std::map<int, int> decomposition;  // vertex -> multiplicity of S_vertex in V0
    bool semisimple = false;
    int v0_total_dim = 0;
    bool independence_ok = false;      // two-point and rescaled-phi checks
    bool equals_member_top = false;    // V0 matches the top of the members
    std::string detail;
};

/// Shrink-to-zero limit of a certified projective family with 1-dimensional
/// socle members.
ShrinkResult shrink(const FamilyChart& chart);

/// Intertwiner solving for block charts in two parameters (s,t): certifies
/// the lambda = mu law symbolically and returns phi_lambda.
struct ProjectiveCertificate {
    bool independent_scalings_give_iso = false;  // must be false for P^1
    bool tied_scaling_gives_iso = false;         // must be true for P^1
    std::vector<MatR> phi;                       // blocks over Q(lambda)
    std::string detail;
};
ProjectiveCertificate certify_p1_block_chart(const FamilyChart& chart);

/// Shrink for block charts using the symbolically solved phi_lambda.
ShrinkResult shrink_block_chart(const FamilyChart& chart,
                                const ProjectiveCertificate& cert);

} // namespace ncres
