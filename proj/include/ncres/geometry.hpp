#pragma once

#include "ncres/algebra.hpp"
#include "ncres/annihilators.hpp"
#include "ncres/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ncres {

/// Hirzebruch-Jung data of r/b: ceiling continued fraction and the boundary
/// lattice points (Pareto-minimal staircase of {(n, n*b mod r)}).
struct HJData {
    int r = 0, b = 0;
    std::vector<int> cf;                        // [a1..al], each >= 2
    std::vector<std::pair<int, int>> boundary;  // (n, m) pairs, n ascending
};
HJData hj_continued_fraction(int r, int b);
/// Evaluates a1 - 1/(a2 - 1/(...)) exactly.
Rational hj_evaluate(const std::vector<int>& cf);

/// The 15-point toric diagram of the r=4 su3 orbifold with the figure's basic
/// triangulation.
struct ToricDiagram {
    struct Point {
        std::string label;  // a1..a3, b1..b3, c1..c3, d1..d3, e1..e3
        int x = 0, y = 0;
        enum class Class { corner_torus, edge_p1_over_cstar, interior_p2 } cls;
    };
    std::vector<Point> points;
    std::vector<std::pair<int, int>> edges;          // indices into points
    std::vector<std::array<int, 3>> triangles;       // basic triangles
    bool edge_on_perimeter(int e) const;
    int point_index(const std::string& label) const;
};
ToricDiagram su3_toric_diagram();

/// Adjacency-table row: edge (g,h) with the figure labels i (at g) and j (at
/// h) whose removal produces the shared l=2 support.
struct Su3AdjacencyRow {
    std::string g, h;
    int i = 0, j = 0;
};
const std::vector<Su3AdjacencyRow>& su3_adjacency_table();

/// Superpotential terms of the su3 algebra: the two length-3 cycles per grid
/// cell, each given as an arrow mask.
std::vector<std::uint64_t> su3_superpotential_terms(const QuiverAlgebra& alg);

/// Exhaustive enumeration of arrow subsets meeting every superpotential term
/// exactly once.
std::vector<std::uint64_t> perfect_matchings(const QuiverAlgebra& alg, Execution exec);

} // namespace ncres
