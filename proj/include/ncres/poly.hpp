#pragma once

#include "ncres/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncres {

/// Graded lexicographic order on exponent vectors, largest term first.
struct GradedLexDesc {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial over Rational.  Variables are kept sorted
/// by name; binary operations align variable sets automatically.
class Poly {
public:
    using TermMap = std::map<std::vector<int>, Rational, GradedLexDesc>;

    Poly() = default;
    explicit Poly(const Rational& c);
    static Poly var(const std::string& name);
    static Poly monomial(const std::vector<std::string>& vars,
                         const std::vector<int>& exps, const Rational& coef);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; requires is_constant().
    Rational constant_value() const;
    int total_degree() const;
    size_t num_terms() const { return terms_.size(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly& operator*=(const Rational& c);

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int e) const;

    /// Full evaluation; every variable must be assigned.
    Rational eval(const std::map<std::string, Rational>& point) const;
    /// Partial substitution of some variables by rationals.
    Poly substitute(const std::map<std::string, Rational>& point) const;

    /// Exact division; throws if the division does not come out exact.
    Poly divide_exact(const Poly& divisor) const;
    /// Rational content (gcd of coefficients with the sign of the leading one).
    Rational content() const;

    /// Canonical text, graded-lex, e.g. "x^2*y - 3".
    std::string str() const;

private:
    void prune();
    std::vector<std::string> vars_;
    TermMap terms_;
    friend void align(Poly& a, Poly& b);
};

/// Rewrites both polynomials over the union of their variable sets.
void align(Poly& a, Poly& b);

/// Finite Laurent expansion in one distinguished parameter; coefficients are
/// polynomials in the remaining variables.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Poly& constant);
    static Laurent lambda_power(int k);

    const std::map<int, Poly>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Least power of the parameter with a nonzero coefficient.
    int min_power() const;

    Laurent& operator+=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent shifted(int k) const;
    Laurent scaled(const Rational& c) const;

    /// Coefficient of the given power (zero poly if absent).
    Poly coeff(int k) const;

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str(const std::string& param = "lambda") const;

private:
    void prune();
    std::map<int, Poly> coeffs_;
};

} // namespace ncres
