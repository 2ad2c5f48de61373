#include "ncres/unirat.hpp"

#include <sstream>
#include <stdexcept>

namespace ncres {

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
    r = a;
    std::vector<Rational> qc;
    int db = b.degree();
    if (a.degree() >= db) qc.assign(size_t(a.degree() - db + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Rational f = r.lead() / b.lead();
        qc[size_t(k)] = f;
        std::vector<Rational> sub(size_t(k), Rational(0));
        sub.push_back(f);
        r = r - b * UniPoly(std::move(sub));
    }
    q = UniPoly(std::move(qc));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rational l = a.lead().inv();
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x *= l;
        a = UniPoly(std::move(c));
    }
    return a;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rational a = c_[i];
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (i == 0) os << a.str();
        else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniRat::UniRat(UniPoly n, UniPoly d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

void UniRat::normalize() {
    if (den_.is_zero()) throw std::domain_error("UniRat: zero denominator");
    if (num_.is_zero()) { den_ = UniPoly(Rational(1)); return; }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        UniPoly q, r;
        UniPoly::divmod(num_, g, q, r);
        num_ = q;
        UniPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational l = den_.lead().inv();
    std::vector<Rational> nc = num_.coeffs(), dc = den_.coeffs();
    for (auto& x : nc) x *= l;
    for (auto& x : dc) x *= l;
    num_ = UniPoly(std::move(nc));
    den_ = UniPoly(std::move(dc));
}

UniRat operator+(const UniRat& a, const UniRat& b) {
    return UniRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
UniRat operator-(const UniRat& a, const UniRat& b) {
    return UniRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
UniRat operator*(const UniRat& a, const UniRat& b) {
    return UniRat(a.num_ * b.num_, a.den_ * b.den_);
}
UniRat operator/(const UniRat& a, const UniRat& b) {
    if (b.is_zero()) throw std::domain_error("UniRat: division by zero");
    return UniRat(a.num_ * b.den_, a.den_ * b.num_);
}

UniRat UniRat::inv() const {
    if (is_zero()) throw std::domain_error("UniRat: inverse of zero");
    return UniRat(den_, num_);
}

std::string UniRat::str(const std::string& var) const {
    if (den_.degree() == 0 && den_.lead().is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace ncres
