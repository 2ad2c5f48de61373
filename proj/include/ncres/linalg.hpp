#pragma once

#include "ncres/poly.hpp"
#include "ncres/rational.hpp"
#include "ncres/unirat.hpp"

#include <cassert>
#include <optional>
#include <vector>

namespace ncres {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T fill = T())
        : rows_(rows), cols_(cols), data_(size_t(rows) * size_t(cols), fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(Rational(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (int j = 0; j < b.cols_; ++j) {
                    T prod = aik * b(k, j);
                    r(i, j) += prod;
                }
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using MatQ = Matrix<Rational>;
using MatP = Matrix<Poly>;
using MatL = Matrix<Laurent>;
using MatR = Matrix<UniRat>;

/// Least power of the parameter over all entries; throws on the zero matrix.
inline int min_lambda_power(const MatL& m) {
    bool found = false;
    int mp = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            int v = m(i, j).min_power();
            mp = found ? std::min(mp, v) : v;
            found = true;
        }
    if (!found) throw std::domain_error("min_lambda_power: zero matrix");
    return mp;
}

/// Evaluates lambda^{-m} * M at lambda = 0; nonzero and finite by choice of m.
inline MatP lambda_limit(const MatL& m) {
    int mp = min_lambda_power(m);
    MatP out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out(i, j) = m(i, j).coeff(mp);
    return out;
}

/// In-place reduced row echelon form over an exact field; returns pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!field_is_zero(m(r, col))) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        F inv = field_inv(m(row, col));
        for (int c = 0; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || field_is_zero(m(r, col))) continue;
            F f = m(r, col);
            for (int c = 0; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
int rank(Matrix<F> m) {
    return int(rref(m).size());
}

/// Basis of the right kernel {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), F());
        v[free] = F(Rational(1));
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F() - m(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F det(Matrix<F> m) {
    assert(m.rows() == m.cols());
    F d(Rational(1));
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!field_is_zero(m(r, col))) { piv = r; break; }
        if (piv < 0) return F();
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
            d = F() - d;
        }
        d = d * m(col, col);
        F inv = field_inv(m(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (field_is_zero(m(r, col))) continue;
            F f = m(r, col) * inv;
            for (int c = col; c < n; ++c) m(r, c) = m(r, c) - f * m(col, c);
        }
    }
    return d;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(Rational(1));
    }
    auto piv = rref(aug);
    if (int(piv.size()) < n || piv[size_t(n) - 1] >= n) {
        // ensure the left block was fully pivoted
        for (int i = 0; i < n; ++i)
            if (i >= int(piv.size()) || piv[i] != i) return std::nullopt;
    }
    Matrix<F> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Fraction of multivariate polynomials with lazy normalization; only the
/// operations needed by Gaussian elimination are provided.
struct PolyFrac {
    Poly num, den;
    PolyFrac() : num(), den(Rational(1)) {}
    PolyFrac(const Rational& c) : num(c), den(Rational(1)) {}
    PolyFrac(Poly n) : num(std::move(n)), den(Rational(1)) {}
    PolyFrac(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    bool is_zero() const { return num.is_zero(); }

    void normalize() {
        if (num.is_zero()) { den = Poly(Rational(1)); return; }
        if (den.is_constant()) {
            num = num.divide_exact(den);
            den = Poly(Rational(1));
            return;
        }
        // try exact cancellation of the full denominator
        try {
            Poly q = num.divide_exact(den);
            num = std::move(q);
            den = Poly(Rational(1));
            return;
        } catch (const std::domain_error&) {}
        Rational cn = num.content(), cd = den.content();
        num = num.divide_exact(Poly(cn));
        den = den.divide_exact(Poly(cd));
        num *= cn / cd;
    }

    friend PolyFrac operator+(const PolyFrac& a, const PolyFrac& b) {
        if (a.den == b.den) return PolyFrac(a.num + b.num, a.den);
        return PolyFrac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend PolyFrac operator-(const PolyFrac& a, const PolyFrac& b) {
        if (a.den == b.den) return PolyFrac(a.num - b.num, a.den);
        return PolyFrac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend PolyFrac operator*(const PolyFrac& a, const PolyFrac& b) {
        return PolyFrac(a.num * b.num, a.den * b.den);
    }
    PolyFrac& operator+=(const PolyFrac& o) { return *this = *this + o; }
    PolyFrac& operator-=(const PolyFrac& o) { return *this = *this - o; }
    friend bool operator==(const PolyFrac& a, const PolyFrac& b) {
        return (a.num * b.den - b.num * a.den).is_zero();
    }
};

inline bool field_is_zero(const PolyFrac& x) { return x.is_zero(); }
inline PolyFrac field_inv(const PolyFrac& x) {
    if (x.is_zero()) throw std::domain_error("PolyFrac: inverse of zero");
    return PolyFrac(x.den, x.num);
}

} // namespace ncres
