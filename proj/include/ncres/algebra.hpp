#pragma once

#include "ncres/linalg.hpp"
#include "ncres/poly.hpp"
#include "ncres/quiver.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ncres {

/// Rational linear combination of parallel paths.
struct Relation {
    struct Term {
        Rational coef;
        Path path;
    };
    std::vector<Term> terms;

    int tail() const { return terms.at(0).path.tail(); }
    int head() const { return terms.at(0).path.head(); }
    void validate() const;
    std::string str() const;
};

/// Impression data (tau, B): per-arrow label matrices over B and per-vertex
/// ranks.  In the thin case every label is a 1x1 matrix.
struct Impression {
    std::vector<std::string> b_vars;
    std::vector<MatP> arrow_labels;  // indexed by arrow id, shape d_head x d_tail
    std::vector<int> vertex_ranks;   // d_i = rank tau(e_i)

    bool is_thin() const {
        for (int d : vertex_ranks)
            if (d != 1) return false;
        return true;
    }
    /// Thin-case scalar label of an arrow.
    const Poly& label(int arrow_id) const { return arrow_labels.at(size_t(arrow_id))(0, 0); }
};

/// Quiver with relations, optional impression, and bookkeeping metadata.
struct QuiverAlgebra {
    std::shared_ptr<Quiver> quiver_ptr;      // keeps Path/Subquiver pointers valid
    std::vector<Relation> relations;
    std::optional<Impression> impression;
    std::string name;
    std::vector<int> expected_dimension_vector;

    const Quiver& quiver() const { return *quiver_ptr; }
    bool expected_thin() const {
        for (int d : expected_dimension_vector)
            if (d != 1) return false;
        return true;
    }
    void validate() const;
};

} // namespace ncres
