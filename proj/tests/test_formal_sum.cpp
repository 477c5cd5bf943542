#include <doctest.h>

#include "matval/formal_sum.hpp"
#include "matval/polynomial.hpp"
#include "support.hpp"

using namespace matval;

TEST_CASE("formal sum arithmetic") {
    using S = FormalSum<int>;
    S x = S::single(7, 3);
    CHECK((x + x.scaled(-1)).is_zero());
    CHECK(S().scaled(5).is_zero());

    S a = S::single(1, 2);
    S b = S::single(2, -1);
    S c = a + b;
    CHECK(c.term_count() == 2);
    CHECK(c.coefficient(1) == 2);
    CHECK(c.coefficient(2) == -1);
    CHECK(c.coefficient(3) == 0);
}

TEST_CASE("formal sum abelian group laws on random sums") {
    using S = FormalSum<int>;
    testing::Rng rng(42);
    auto random_sum = [&]() {
        S s;
        int terms = rng.below(6);
        for (int i = 0; i < terms; ++i)
            s.add_term(rng.below(8), Integer(rng.below(11)) - 5);
        return s;
    };
    for (int trial = 0; trial < 200; ++trial) {
        S a = random_sum(), b = random_sum(), c = random_sum();
        CHECK((a + b) == (b + a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK((a + S()) == a);
        CHECK((a - a).is_zero());
        CHECK(a.scaled(3) == (a + a + a));
        CHECK(a.scaled(0).is_zero());
    }
}

TEST_CASE("bivariate polynomial arithmetic and evaluation") {
    // x^2 + 2x + 2y + y^2
    Polynomial2 p;
    p.add_term(2, 0, 1);
    p.add_term(1, 0, 2);
    p.add_term(0, 1, 2);
    p.add_term(0, 2, 1);
    CHECK(p.eval(1, 1) == 6);  // basis count of U(2,4)
    CHECK(p.eval(0, 0) == 0);  // constant term
    CHECK(Polynomial2().eval(5, -7) == 0);

    Polynomial2 q = Polynomial2::monomial(1, 0) - Polynomial2::constant(1);
    Polynomial2 q2 = q * q;
    CHECK(q2.eval(3, 0) == 4);
    CHECK(q.pow(2) == q2);
    CHECK((p - p).is_zero());
}

TEST_CASE("constant term rule") {
    Polynomial2 p;
    p.add_term(0, 0, 5);
    p.add_term(3, 2, -4);
    CHECK(p.eval(0, 0) == 5);
}

TEST_CASE("univariate polynomials and interpolation") {
    UniPoly p(QVector{Rational(1), Rational(1)});  // 1 + t
    CHECK(p.eval(4) == 5);
    CHECK(p.degree() == 1);
    UniPoly q = lagrange_interpolate({{Rational(0), Rational(1)},
                                      {Rational(1), Rational(2)},
                                      {Rational(2), Rational(3)}});
    CHECK(q == p);  // degree collapses
    CHECK((p - p).is_zero());
    UniPoly cubic = lagrange_interpolate({{Rational(0), Rational(0)},
                                          {Rational(1), Rational(1)},
                                          {Rational(2), Rational(8)},
                                          {Rational(3), Rational(27)}});
    CHECK(cubic.eval(5) == 125);
    CHECK(cubic.leading_coefficient() == 1);
}
