#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncres/linalg.hpp"
#include "ncres/poly.hpp"
#include "ncres/rational.hpp"
#include "ncres/unirat.hpp"

#include <random>

using namespace ncres;

TEST_CASE("rational arithmetic and parsing") {
    Rational a(1, 2), b(-2, 4);
    CHECK(a + b == Rational(0));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).inv() == Rational(1, 5));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("poly product difference of squares") {
    Poly x = Poly::var("x"), y = Poly::var("y");
    CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("poly evaluation") {
    Poly x = Poly::var("x"), y = Poly::var("y");
    Poly p = x * x * y;
    CHECK(p.eval({{"x", Rational(2)}, {"y", Rational(3)}}) == Rational(12));
    // conifold center generator xz at (1,1,1,1)
    Poly xz = Poly::var("x") * Poly::var("z");
    CHECK(xz.eval({{"x", Rational(1)}, {"y", Rational(1)},
                   {"z", Rational(1)}, {"w", Rational(1)}}) == Rational(1));
    CHECK_THROWS(p.eval({{"x", Rational(1)}}));
}

TEST_CASE("poly ring axioms on random instances") {
    std::mt19937 rng(7);
    auto random_poly = [&]() {
        Poly p;
        const char* vars[] = {"x", "y", "z"};
        for (int t = 0; t < 4; ++t) {
            Poly m(Rational((long long)(rng() % 7) - 3));
            for (int k = 0; k < 3; ++k)
                for (unsigned e = rng() % 3; e > 0; --e) m *= Poly::var(vars[k]);
            p += m;
        }
        return p;
    };
    for (int i = 0; i < 25; ++i) {
        Poly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("canonical graded-lex rendering") {
    Poly p = Poly::var("x") * Poly::var("x") * Poly::var("y") - Poly(Rational(3));
    CHECK(p.str() == "x^2*y - 3");
    Poly q = Poly::var("y") + Poly::var("x");
    CHECK(q.str() == "x + y");
    CHECK(Poly().str() == "0");
}

TEST_CASE("exact division") {
    Poly x = Poly::var("x"), y = Poly::var("y");
    Poly num = x * x - y * y;
    CHECK(num.divide_exact(x - y) == x + y);
    CHECK_THROWS(num.divide_exact(x + Poly(Rational(1))));
}

TEST_CASE("laurent min power and limits") {
    // [[lambda, 0], [0, 1]] -> min power 0
    MatL m(2, 2);
    m(0, 0) = Laurent::lambda_power(1);
    m(1, 1) = Laurent::lambda_power(0);
    int mp = 100;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!m(i, j).is_zero()) mp = std::min(mp, m(i, j).min_power());
    CHECK(mp == 0);
    // [[lambda],[lambda^2]] -> min power 1
    CHECK(Laurent::lambda_power(1).min_power() == 1);
    // limit of diag(1, lambda): evaluate coefficient at min power
    CHECK(m(0, 0).coeff(0).is_zero());
    CHECK(m(1, 1).coeff(0) == Poly(Rational(1)));
    // rescaling invariance: c * lambda^k shifts all powers uniformly
    Laurent l = Laurent::lambda_power(2).scaled(Rational(3));
    Laurent shifted = l.shifted(5);
    CHECK(shifted.min_power() - l.min_power() == 5);
}

TEST_CASE("unirat field arithmetic") {
    UniRat x = UniRat::x();
    UniRat f = (x * x - UniRat(Rational(1))) / (x - UniRat(Rational(1)));
    // reduces to x + 1
    CHECK(f == x + UniRat(Rational(1)));
    CHECK((f / f).is_one());
}

TEST_CASE("rational matrix kernel and determinant") {
    MatQ m(2, 3);
    m(0, 0) = Rational(1);
    m(0, 1) = Rational(2);
    m(0, 2) = Rational(3);
    m(1, 0) = Rational(2);
    m(1, 1) = Rational(4);
    m(1, 2) = Rational(6);
    CHECK(rank(m) == 1);
    auto ker = kernel_basis(m);
    CHECK(ker.size() == 2);
    MatQ sq(2, 2);
    sq(0, 0) = Rational(2);
    sq(1, 1) = Rational(3);
    sq(0, 1) = Rational(1);
    CHECK(det(sq) == Rational(6));
    auto inv = inverse(sq);
    REQUIRE(inv.has_value());
    CHECK((*inv * sq) == MatQ::identity(2));
}

TEST_CASE("matrix min lambda power and lambda limit") {
    MatL m(2, 2);
    m(0, 0) = Laurent(Poly(Rational(1)));
    m(1, 1) = Laurent::lambda_power(1);
    CHECK(min_lambda_power(m) == 0);
    MatP lim = lambda_limit(m);
    CHECK(lim(0, 0) == Poly(Rational(1)));
    CHECK(lim(1, 1).is_zero());

    MatL col(2, 1);
    col(0, 0) = Laurent::lambda_power(1);
    col(1, 0) = Laurent::lambda_power(2);
    CHECK(min_lambda_power(col) == 1);

    MatL both(2, 2);
    both(0, 0) = Laurent::lambda_power(1);
    both(0, 1) = Laurent(Poly(Rational(1)));
    both(1, 1) = Laurent::lambda_power(1);
    MatP lim2 = lambda_limit(both);
    CHECK(lim2(0, 0).is_zero());
    CHECK(lim2(0, 1) == Poly(Rational(1)));
    CHECK(lim2(1, 1).is_zero());

    // rescaling invariance: c * lambda^k * M has the same limit
    MatL scaled(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!both(i, j).is_zero())
                scaled(i, j) = both(i, j).shifted(3).scaled(Rational(7));
    MatP lim3 = lambda_limit(scaled);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Poly x = lim2(i, j);
            x *= Rational(7);
            CHECK(lim3(i, j) == x);
        }
    CHECK_THROWS(min_lambda_power(MatL(2, 2)));
}
