#include "ncres/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace ncres {

void Relation::validate() const {
    if (terms.empty()) throw std::invalid_argument("Relation: empty");
    bool nonzero = false;
    for (const auto& t : terms) {
        if (t.path.tail() != tail() || t.path.head() != head())
            throw std::invalid_argument("Relation: terms not parallel");
        if (!t.coef.is_zero()) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("Relation: all coefficients zero");
}

std::string Relation::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        Rational c = t.coef;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (!c.is_one()) os << c.str() << "*";
        os << t.path.str();
    }
    return os.str();
}

void QuiverAlgebra::validate() const {
    for (const auto& r : relations) r.validate();
    if (int(expected_dimension_vector.size()) != quiver().num_vertices())
        throw std::invalid_argument(name + ": dimension vector length mismatch");
    if (impression) {
        if (int(impression->arrow_labels.size()) != quiver().num_arrows())
            throw std::invalid_argument(name + ": impression label count mismatch");
        if (int(impression->vertex_ranks.size()) != quiver().num_vertices())
            throw std::invalid_argument(name + ": impression rank count mismatch");
    }
}

} // namespace ncres
