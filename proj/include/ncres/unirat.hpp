#pragma once

#include "ncres/poly.hpp"
#include "ncres/rational.hpp"

#include <string>
#include <vector>

namespace ncres {

/// Dense univariate polynomial over Rational (coefficient of degree i at c[i]).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c) { if (!c.is_zero()) c_ = {c}; }
    static UniPoly x() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational at(int i) const {
        return (i >= 0 && i < int(c_.size())) ? c_[size_t(i)] : Rational(0);
    }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Division with remainder.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    static UniPoly gcd(UniPoly a, UniPoly b);

    Rational eval(const Rational& x) const;

    std::string str(const std::string& var = "lambda") const;

private:
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
    std::vector<Rational> c_;
};

/// Univariate rational function num/den, den monic and coprime to num.
class UniRat {
public:
    UniRat() : num_(), den_(Rational(1)) {}
    UniRat(Rational c) : num_(c), den_(Rational(1)) {}
    UniRat(UniPoly n, UniPoly d);
    static UniRat x() { return UniRat(UniPoly::x(), UniPoly(Rational(1))); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == den_; }

    UniRat operator-() const { return UniRat(-num_, den_); }
    friend UniRat operator+(const UniRat& a, const UniRat& b);
    friend UniRat operator-(const UniRat& a, const UniRat& b);
    friend UniRat operator*(const UniRat& a, const UniRat& b);
    friend UniRat operator/(const UniRat& a, const UniRat& b);
    UniRat& operator+=(const UniRat& o) { return *this = *this + o; }
    UniRat& operator-=(const UniRat& o) { return *this = *this - o; }
    UniRat& operator*=(const UniRat& o) { return *this = *this * o; }
    UniRat& operator/=(const UniRat& o) { return *this = *this / o; }
    friend bool operator==(const UniRat& a, const UniRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const UniRat& a, const UniRat& b) { return !(a == b); }
    UniRat inv() const;

    std::string str(const std::string& var = "lambda") const;

private:
    void normalize();
    UniPoly num_, den_;
};

/// Field-concept hooks used by the generic elimination routines.
inline bool field_is_zero(const Rational& x) { return x.is_zero(); }
inline Rational field_inv(const Rational& x) { return x.inv(); }
inline bool field_is_zero(const UniRat& x) { return x.is_zero(); }
inline UniRat field_inv(const UniRat& x) { return x.inv(); }

} // namespace ncres
