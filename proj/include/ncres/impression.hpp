#pragma once

#include "ncres/algebra.hpp"
#include "ncres/families.hpp"

#include <string>
#include <vector>

namespace ncres {

/// Label of a path under the impression: product of arrow labels read right
/// to left (thin case yields a scalar polynomial in B).
Poly bar_tau(const Impression& imp, const Path& p);
MatP tau_matrix(const Impression& imp, const Path& p);

/// Checks that every relation vanishes identically under tau.
bool impression_satisfies_relations(const QuiverAlgebra& alg);

/// Central element labels: monomials mu in B such that every vertex carries a
/// cycle with label mu, up to the length bound; products of previously found
/// generators are filtered out.
std::vector<Poly> center_generators(const QuiverAlgebra& alg, int max_len);

/// Homogeneous coordinates of a chart: bar-tau labels of its generating paths.
std::vector<Poly> family_coordinates(const QuiverAlgebra& alg, const FamilyChart& chart);

} // namespace ncres
