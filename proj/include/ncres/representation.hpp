#pragma once

#include "ncres/algebra.hpp"
#include "ncres/linalg.hpp"
#include "ncres/quiver.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ncres {

/// Representation with one matrix per arrow, shape d_head x d_tail.
template <class T>
struct BasicRep {
    const QuiverAlgebra* algebra = nullptr;
    std::vector<int> dim;
    std::vector<Matrix<T>> mats;

    const Quiver& quiver() const { return algebra->quiver(); }
    int total_dim() const {
        int s = 0;
        for (int d : dim) s += d;
        return s;
    }
};

using RepQ = BasicRep<Rational>;
using RepP = BasicRep<Poly>;

/// Thin representation: dimension 1 at every vertex, scalar arrow values.
/// The support subquiver consists of the arrows with nonzero value.
struct ThinRep {
    const QuiverAlgebra* algebra = nullptr;
    std::vector<Rational> values;  // per arrow id; zero = not in support

    Subquiver support() const;
    RepQ to_rep() const;
    static ThinRep all_ones(const QuiverAlgebra& alg, const Subquiver& support);
};

struct SocleTopReport {
    std::map<int, int> socle;  // vertex -> multiplicity
    std::map<int, int> top;
};

template <class T>
Matrix<T> evaluate_path(const BasicRep<T>& rep, const Path& p);

/// Violated relations (exact evaluation; symbolic for polynomial entries).
template <class T>
std::vector<Relation> check_relations(const BasicRep<T>& rep);

/// Socle/top via kernels and images of arrow matrices.  Exact whenever the
/// arrow ideal acts nilpotently (true for all acyclic supports); callers with
/// oriented cycles in the support should use thin_terminal_sccs instead.
SocleTopReport socle_top(const RepQ& rep);
SocleTopReport socle_top_symbolic(const RepP& rep);

/// Terminal strongly connected components of a thin representation's support
/// digraph.  The socle of a thin module is the direct sum of the simple
/// modules spanned by these components.
std::vector<std::vector<int>> thin_terminal_sccs(const ThinRep& rep);
/// True socle report for a thin module (sum of terminal components).
SocleTopReport thin_socle(const ThinRep& rep);

/// Simplicity via the generation test: every coordinate basis vector must
/// generate the whole module.  Exact for vertex dimensions <= 1 (submodules
/// of such modules are coordinate-graded); larger blocks are rejected.
bool is_simple(const RepQ& rep);
bool is_simple_thin(const ThinRep& rep);

/// Pulled-apart quiver: one vertex per basis line, one arrow per nonzero
/// matrix entry, tagged with the originating arrow.
struct PulledApart {
    Quiver quiver;
    std::vector<std::pair<int, int>> line;  // pulled vertex -> (Q vertex, basis index)
    std::vector<int> arrow_origin;          // pulled arrow -> original arrow id
};
PulledApart pulled_apart(const RepQ& rep);
PulledApart pulled_apart(const RepP& rep);

/// Applies a gauge (one scalar per vertex) to a thin representation.
ThinRep gauge(const ThinRep& rep, const std::vector<Rational>& g);

/// Isomorphism test for thin representations via gauge propagation over a
/// spanning forest of the common support.
std::optional<std::vector<Rational>> iso_test_thin(const ThinRep& a, const ThinRep& b);

/// General isomorphism test: computes the intertwiner space and searches it
/// for an invertible element (deterministic samples, then symbolic
/// determinant).  Returns the per-vertex blocks of an isomorphism.
std::optional<std::vector<MatQ>> iso_test(const RepQ& a, const RepQ& b);

/// Solution space of g_head A_a = B_a g_tail for all arrows; each element is
/// the concatenated list of per-vertex blocks.
std::vector<std::vector<MatQ>> intertwiner_space(const RepQ& a, const RepQ& b);

RepQ direct_sum(const RepQ& a, const RepQ& b);

/// Evaluates a polynomial representation at a rational point.
RepQ eval_rep(const RepP& rep, const std::map<std::string, Rational>& point);

} // namespace ncres
