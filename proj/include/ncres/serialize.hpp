#pragma once

#include "ncres/algebra.hpp"
#include "ncres/families.hpp"

#include <memory>
#include <string>

namespace ncres {

/// JSON quiver spec: {"vertices": N, "arrows": [{"name","tail","head","label"?}],
/// "relations": [[{"coef","path":[names in composition order]}]],
/// "dimension_vector": [...]}; stable key order, UTF-8.
std::string algebra_to_json(const QuiverAlgebra& alg);
std::shared_ptr<QuiverAlgebra> algebra_from_json(const std::string& text);

/// Deterministic DOT rendering; arrows outside the support are dotted.
std::string quiver_to_dot(const Quiver& q, const std::string& name);
std::string subquiver_to_dot(const Subquiver& s, const std::string& name);
std::string chart_to_dot(const FamilyChart& chart, const std::string& coordinates);

} // namespace ncres
