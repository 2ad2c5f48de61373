#include "ncres/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncres {

HJData hj_continued_fraction(int r, int b) {
    if (r < 2 || b < 1 || b >= r || std::gcd(r, b) != 1)
        throw std::invalid_argument("hj_continued_fraction: need 1 <= b < r, gcd(r,b)=1");
    HJData d;
    d.r = r;
    d.b = b;
    int rr = r, bb = b;
    while (bb > 0) {
        int a = (rr + bb - 1) / bb;  // ceiling
        d.cf.push_back(a);
        int nr = bb, nb = a * bb - rr;
        rr = nr;
        bb = nb;
    }
    // Pareto-minimal staircase of {(n, n*b mod r)}: keep running minima of m
    int best = r + 1;
    for (int n = 1; n < r; ++n) {
        int m = int((static_cast<long long>(n) * b) % r);
        if (m < best) {
            best = m;
            d.boundary.emplace_back(n, m);
        }
    }
    if (d.boundary.size() != d.cf.size())
        throw std::logic_error("hj_continued_fraction: staircase/expansion mismatch");
    return d;
}

Rational hj_evaluate(const std::vector<int>& cf) {
    if (cf.empty()) throw std::invalid_argument("hj_evaluate: empty expansion");
    Rational acc(cf.back());
    for (size_t i = cf.size() - 1; i-- > 0;)
        acc = Rational(cf[i]) - acc.inv();
    return acc;
}

ToricDiagram su3_toric_diagram() {
    ToricDiagram d;
    using C = ToricDiagram::Point::Class;
    auto add = [&](const std::string& label, int x, int y, C c) {
        d.points.push_back({label, x, y, c});
    };
    add("a1", 0, 0, C::corner_torus);
    add("b1", 1, 0, C::edge_p1_over_cstar);
    add("b2", 2, 0, C::edge_p1_over_cstar);
    add("b3", 3, 0, C::edge_p1_over_cstar);
    add("a2", 4, 0, C::corner_torus);
    add("d3", 0, 1, C::edge_p1_over_cstar);
    add("e1", 1, 1, C::interior_p2);
    add("e2", 2, 1, C::interior_p2);
    add("c1", 3, 1, C::edge_p1_over_cstar);
    add("d2", 0, 2, C::edge_p1_over_cstar);
    add("e3", 1, 2, C::interior_p2);
    add("c2", 2, 2, C::edge_p1_over_cstar);
    add("d1", 0, 3, C::edge_p1_over_cstar);
    add("c3", 1, 3, C::edge_p1_over_cstar);
    add("a3", 0, 4, C::corner_torus);
    auto at = [&](const std::string& l) { return d.point_index(l); };
    const char* edge_list[][2] = {
        {"a1", "b1"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "a2"},
        {"d3", "e1"}, {"e1", "e2"}, {"e2", "c1"},
        {"d2", "e3"}, {"e3", "c2"},
        {"d1", "c3"},
        {"a1", "d3"}, {"b1", "d3"}, {"b1", "e1"}, {"b2", "e1"}, {"b2", "e2"},
        {"b3", "e2"}, {"b3", "c1"}, {"a2", "c1"},
        {"d3", "d2"}, {"e1", "d2"}, {"e1", "e3"}, {"e2", "e3"}, {"e2", "c2"},
        {"c1", "c2"},
        {"d2", "d1"}, {"e3", "d1"}, {"e3", "c3"}, {"c2", "c3"},
        {"d1", "a3"}, {"c3", "a3"},
    };
    for (const auto& e : edge_list) d.edges.emplace_back(at(e[0]), at(e[1]));
    // basic triangles = 3-cliques of the edge graph
    std::vector<std::vector<bool>> adj(d.points.size(),
                                       std::vector<bool>(d.points.size(), false));
    for (auto [u, v] : d.edges) adj[size_t(u)][size_t(v)] = adj[size_t(v)][size_t(u)] = true;
    for (size_t i = 0; i < d.points.size(); ++i)
        for (size_t j = i + 1; j < d.points.size(); ++j)
            for (size_t k = j + 1; k < d.points.size(); ++k)
                if (adj[i][j] && adj[i][k] && adj[j][k])
                    d.triangles.push_back({int(i), int(j), int(k)});
    return d;
}

int ToricDiagram::point_index(const std::string& label) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i].label == label) return int(i);
    throw std::invalid_argument("ToricDiagram: unknown label " + label);
}

bool ToricDiagram::edge_on_perimeter(int e) const {
    const Point& a = points[size_t(edges[size_t(e)].first)];
    const Point& b = points[size_t(edges[size_t(e)].second)];
    // perimeter: both endpoints on x=0, on y=0, or on x+y=4
    if (a.x == 0 && b.x == 0) return true;
    if (a.y == 0 && b.y == 0) return true;
    if (a.x + a.y == 4 && b.x + b.y == 4) return true;
    return false;
}

const std::vector<Su3AdjacencyRow>& su3_adjacency_table() {
    static const std::vector<Su3AdjacencyRow> rows = {
        {"a1", "d3", 2, 2}, {"b2", "e2", 4, 6}, {"c1", "e2", 4, 2},
        {"c3", "d1", 4, 4}, {"d2", "e1", 3, 2},
        {"a1", "b1", 1, 1}, {"b2", "b3", 2, 1}, {"c1", "c2", 3, 1},
        {"c3", "a3", 3, 1}, {"d2", "d3", 2, 1},
        {"b1", "d3", 3, 3}, {"b3", "e2", 3, 3}, {"c2", "e2", 2, 5},
        {"a3", "d1", 2, 1}, {"d3", "e1", 4, 4},
        {"b1", "e1", 4, 3}, {"b3", "c1", 4, 2}, {"c2", "e3", 4, 5},
        {"d1", "e3", 3, 3}, {"e1", "e2", 5, 1},
        {"b1", "b2", 2, 1}, {"b3", "a2", 2, 1}, {"c2", "c3", 3, 1},
        {"d1", "d2", 2, 1}, {"e2", "e3", 4, 4},
        {"b2", "e1", 3, 1}, {"a2", "c1", 2, 1}, {"c3", "e3", 2, 2},
        {"d2", "e3", 4, 6}, {"e3", "e1", 1, 6},
    };
    return rows;
}

std::vector<std::uint64_t> su3_superpotential_terms(const QuiverAlgebra& alg) {
    const Quiver& q = alg.quiver();
    int nv = q.num_vertices();
    int r = 0;
    while (r * r < nv) ++r;
    if (r * r != nv || alg.name.rfind("su3(", 0) != 0)
        throw std::invalid_argument("su3_superpotential_terms: not an su3 algebra");
    auto vid = [r](int i, int j) { return ((i % r + r) % r) + r * ((j % r + r) % r); };
    auto aid = [&](char kind, int i, int j) {
        int base = kind == 'a' ? 0 : (kind == 'b' ? nv : 2 * nv);
        return base + vid(i, j);
    };
    std::vector<std::uint64_t> terms;
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) {
            std::uint64_t t1 = 0, t2 = 0;
            t1 |= std::uint64_t(1) << aid('a', i, j);
            t1 |= std::uint64_t(1) << aid('b', i, j + 1);
            t1 |= std::uint64_t(1) << aid('c', i + 1, j + 1);
            t2 |= std::uint64_t(1) << aid('b', i, j);
            t2 |= std::uint64_t(1) << aid('a', i + 1, j);
            t2 |= std::uint64_t(1) << aid('c', i + 1, j + 1);
            terms.push_back(t1);
            terms.push_back(t2);
        }
    return terms;
}

} // namespace ncres
