#pragma once

#include "ncres/algebra.hpp"
#include "ncres/families.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ncres {

/// Two vertices, arrows a_1..a_n: 1 -> 2 and b: 2 -> 1, cycles commute.
/// Vertices are 0-based: paper vertex 1 = 0, vertex 2 = 1.
std::shared_ptr<QuiverAlgebra> tautological_algebra(int n);

/// Conifold quiver algebra with impression labels x, y, z, w.
/// Paper vertex 1 = 0, vertex 2 = 1.
std::shared_ptr<QuiverAlgebra> conifold_algebra();

/// McKay quiver algebra of the cyclic 1/r(1,b) action: r vertices 0..r-1,
/// arrows a_i: i -> i+1 and b_i: i -> i+b, relations b_{i+1} a_i - a_{i+b} b_i
/// (the relation index i+b is forced by the arrow endpoints).
std::shared_ptr<QuiverAlgebra> cyclic_mckay_algebra(int r, int b);

/// McKay quiver algebra of mu_r x mu_r acting on C^3: r^2 vertices on a torus
/// grid, vertex (i,j) has id i + r*j; arrows a (up), b (right), c (down-left).
std::shared_ptr<QuiverAlgebra> abelian_su3_algebra(int r);

enum class PreprojectiveKind { D, E6 };

/// Preprojective algebra of the D_{n+2} or E6 McKay quiver.  For D the
/// parameter is n: vertices 0..n+2, with 0 and 1 attached to 2 and the fork
/// n+1, n+2 attached to n.  For E6 the vertices are 0..6 with center 2, legs
/// (0,1), (5,3), (6,4).
std::shared_ptr<QuiverAlgebra> preprojective_algebra(PreprojectiveKind kind, int n = 0);

inline std::shared_ptr<QuiverAlgebra> preprojective_D(int n_plus_2) {
    return preprojective_algebra(PreprojectiveKind::D, n_plus_2 - 2);
}
inline std::shared_ptr<QuiverAlgebra> preprojective_E6() {
    return preprojective_algebra(PreprojectiveKind::E6);
}

/// Built-in pulled-apart family charts for D(n+2) (n+2 charts) or E6 (6
/// charts), with signs of unlabeled arrows solved so the preprojective
/// relations hold identically in (s,t).  The socle vertex must be one of
/// {0, 1, n+1, n+2} for D and {0, 5, 6} for E6; other choices are obtained
/// from the socle-0 charts by a quiver automorphism.
std::vector<FamilyChart> builtin_family_charts(const QuiverAlgebra& alg, int socle);

/// Intersection data of the D/E exceptional components: chart index pairs
/// with the parameter expressions that vanish at the shared point.
struct DEIntersectionRow {
    std::string arrow_name;   // the quiver arrow naming the intersection
    int chart_a = 0, chart_b = 0;  // 1-based chart indices (E_i labels)
    // arrows of each chart that vanish at the intersection point, given as
    // pulled-apart entry indices into the chart's sigma
    std::string vanish_a, vanish_b;  // parameter expression text, e.g. "t1", "s2+t2"
};
std::vector<DEIntersectionRow> de_intersection_rows(const QuiverAlgebra& alg);

/// The 15 standard supporting subquivers of the r=4 orbifold with their
/// numeric edge labels and bold-vertex sets, keyed a1..a3, b1..b3, c1..c3,
/// d1..d3, e1..e3 after the toric diagram points they parameterize.
struct Su3FigureChart {
    std::string name;
    std::uint64_t support_mask = 0;
    // label -> arrow mask removed for the corresponding toric edge
    std::vector<std::uint64_t> label_masks;  // index 0 unused; labels 1..6
    std::vector<int> bold_vertices;
};
const std::vector<Su3FigureChart>& su3_figure_charts();
const Su3FigureChart& su3_figure_chart(const std::string& name);

/// Catalog registry for the CLI.
std::vector<std::string> catalog_names();
std::shared_ptr<QuiverAlgebra> catalog_build(const std::string& name);

} // namespace ncres
