#include <gtest/gtest.h>

#include <unordered_set>

#include "kwise/combinatorics.hpp"
#include "kwise/error.hpp"
#include "kwise/grid.hpp"
#include "kwise/polynomial.hpp"
#include "kwise/rational.hpp"

namespace kwise {
namespace {

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

TEST(Rational, CanonicalForm) {
  const Rational r(mpz_class(6), mpz_class(-8));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r.str(), "-3/4");
  EXPECT_EQ(Rational(7).str(), "7");
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
}

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
  EXPECT_EQ(q(1, 3) - q(1, 2), q(-1, 6));
  EXPECT_EQ(q(2, 3) * q(9, 4), q(3, 2));
  EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
  EXPECT_THROW(q(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational(0).reciprocal(), DivisionByZero);
  EXPECT_EQ(q(-2, 3).pow(3), q(-8, 27));
  EXPECT_EQ(q(2, 3).pow(-2), q(9, 4));
  EXPECT_EQ(q(5).pow(0), q(1));
  EXPECT_LT(q(1, 3), q(1, 2));
  EXPECT_EQ(q(-3, 7).abs(), q(3, 7));
}

TEST(Rational, ParseRoundTrip) {
  for (const char* text : {"0", "-5", "3/4", "-22/7", "123456789012345678901234567891/2"}) {
    EXPECT_EQ(Rational::parse(text).str(), text);
  }
  EXPECT_EQ(Rational::parse("4/6"), q(2, 3));
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
  EXPECT_THROW(Rational::parse("abc"), DomainError);
  EXPECT_THROW(Rational::parse(""), DomainError);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(q(2, 3).to_decimal(), "0.666666666667");
  EXPECT_EQ(q(1, 4).to_decimal(), "0.25");
  EXPECT_EQ(q(0).to_decimal(), "0");
  EXPECT_EQ(q(-1, 8).to_decimal(3), "-0.125");
  // Half-even: 0.125 at two digits rounds to 0.12, 0.375 to 0.38.
  EXPECT_EQ(q(1, 8).to_decimal(2), "0.12");
  EXPECT_EQ(q(3, 8).to_decimal(2), "0.38");
  EXPECT_EQ(q(1, 1024).to_decimal(), "0.0009765625");
}

TEST(Rational, Hashing) {
  std::unordered_set<Rational> s{q(1, 2), q(2, 4), q(-1, 2)};
  EXPECT_EQ(s.size(), 2u);
}

TEST(Combinatorics, Values) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(8), 384);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(int_pow(0, 0), 1);
  EXPECT_EQ(int_pow(-2, 5), -32);
}

TEST(Combinatorics, EvenDoubleFactorialIdentity) {
  for (int m = 0; m <= 30; ++m) {
    EXPECT_EQ(double_factorial(2 * m), int_pow(2, m) * factorial(m));
    EXPECT_EQ(double_factorial(2 * m) * double_factorial(2 * m - 1), factorial(2 * m));
  }
}

TEST(Polynomial, TrimAndDegree) {
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(Polynomial({q(1), q(0), q(0)}).degree(), 0);
  EXPECT_TRUE(Polynomial({q(0)}).is_zero());
  EXPECT_EQ((Polynomial::monomial(3) - Polynomial::monomial(3)).degree(), -1);
}

TEST(Polynomial, Arithmetic) {
  const Polynomial x = Polynomial::monomial(1);
  const Polynomial p = (x + Polynomial::constant(q(1))) * (x - Polynomial::constant(q(1)));
  EXPECT_EQ(p, Polynomial({q(-1), q(0), q(1)}));
  EXPECT_EQ(p(q(3)), q(8));
  EXPECT_EQ(p.str("t"), "t^2 - 1");
  const std::vector<Rational> roots = {q(-1), q(1)};
  EXPECT_EQ(Polynomial::from_roots(roots), p);
}

TEST(Polynomial, AffineCompose) {
  const Polynomial x2 = Polynomial::monomial(2);
  EXPECT_EQ(poly_affine_compose(x2, q(1), q(0)), x2);
  EXPECT_EQ(poly_affine_compose(x2, q(1), q(1, 2)), Polynomial({q(1, 4), q(1), q(1)}));
  EXPECT_EQ(poly_affine_compose(x2, q(3, 2), q(0)), Polynomial::monomial(2, q(9, 4)));
}

TEST(Polynomial, InterpolationRecoversPolynomial) {
  const Polynomial p({q(1, 3), q(-2), q(0), q(5, 7)});
  std::vector<Rational> xs, ys;
  for (int i = -2; i <= 3; ++i) {
    xs.push_back(q(i, 3));
    ys.push_back(p(xs.back()));
  }
  EXPECT_EQ(interpolate(xs, ys), p);
  EXPECT_EQ(p.truncate(1), Polynomial({q(1, 3), q(-2)}));
}

TEST(Grid, Points) {
  EXPECT_EQ(grid_points(GridKind::kIn, 2).points, (std::vector<Rational>{q(-1, 2), q(1, 2)}));
  EXPECT_EQ(grid_points(GridKind::kOut, 2).points, (std::vector<Rational>{q(-1), q(0), q(1)}));
  EXPECT_EQ(grid_points(GridKind::kIn, 3).points, (std::vector<Rational>{q(-2, 3), q(0), q(2, 3)}));
  EXPECT_THROW(grid_points(GridKind::kIn, 0), DomainError);
  EXPECT_EQ(parse_grid_kind("out"), GridKind::kOut);
  EXPECT_THROW(parse_grid_kind("mid"), DomainError);
}

TEST(Grid, StretchMapsInOntoOut) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(stretch_map(n).apply(grid_points(GridKind::kIn, n + 1).points),
              grid_points(GridKind::kOut, n).points);
  }
  EXPECT_TRUE(grid_points(GridKind::kOut, 4).contains(stretch_map(4)(q(2, 5))));
}

TEST(Grid, Weights) {
  EXPECT_EQ(weight_to_point(2, 0), q(1));
  EXPECT_EQ(weight_to_point(2, 1), q(0));
  EXPECT_EQ(weight_to_point(4, 3), q(-1, 2));
  EXPECT_EQ(point_to_weight(4, q(-1, 2)), 3);
  EXPECT_THROW(weight_to_point(4, 5), DomainError);
  EXPECT_THROW(point_to_weight(4, q(1, 3)), DomainError);
}

TEST(Grid, InnerProduct) {
  const Polynomial one = Polynomial::constant(q(1));
  const Polynomial x = Polynomial::monomial(1);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(inner_product(one, one, n), q(1));
    EXPECT_EQ(inner_product(x, one, n), q(0));
  }
  EXPECT_EQ(inner_product(x, x, 4), q(5, 16));
}

}  // namespace
}  // namespace kwise
