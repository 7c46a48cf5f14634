#include <gtest/gtest.h>

#include "kwise/error.hpp"
#include "kwise/gram.hpp"
#include "kwise/grid.hpp"

namespace kwise {
namespace {

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }
const Polynomial x = Polynomial::monomial(1);

TEST(Gram, SmallBases) {
  const OrthoBasis b2 = build_basis_gs(2, 1);
  EXPECT_EQ(b2.psi[1], x);
  EXPECT_EQ(b2.norm_sq, (std::vector<Rational>{q(1), q(1, 4)}));

  const OrthoBasis b4 = build_basis_gs(4, 2);
  EXPECT_EQ(b4.psi[2], Polynomial({q(-5, 16), q(0), q(1)}));
  EXPECT_EQ(b4.norm_sq[2], q(1, 16));

  const OrthoBasis b3 = build_basis_gs(3, 1);
  EXPECT_EQ(b3.norm_sq[1], q(8, 27));
}

TEST(Gram, AlphaSquared) {
  EXPECT_EQ(alpha_sq(2, 1), q(1));
  EXPECT_EQ(alpha_sq(4, 1), q(4, 5));
  EXPECT_EQ(alpha_sq(4, 2), q(5, 4));
  EXPECT_THROW(alpha_sq(4, 0), DomainError);
  EXPECT_THROW(alpha_sq(4, 4), DomainError);
}

TEST(Gram, RecurrenceMatchesGramSchmidt) {
  EXPECT_EQ(build_basis_recurrence(4, 2).psi[2], Polynomial({q(-5, 16), q(0), q(1)}));
  EXPECT_EQ(build_basis_recurrence(2, 1).psi[1], x);
  for (int n = 1; n <= 14; ++n) {
    EXPECT_EQ(build_basis_recurrence(n, n - 1), build_basis_gs(n, n - 1)) << "n=" << n;
  }
}

TEST(Gram, BasisProperties) {
  const int n = 9;
  const OrthoBasis b = build_basis_recurrence(n, n - 1);
  for (int i = 0; i < n; ++i) {
    const auto& pi = b.psi[static_cast<std::size_t>(i)];
    EXPECT_EQ(pi.degree(), i);
    EXPECT_TRUE(pi.is_monic());
    EXPECT_EQ(inner_product(pi, pi, n), b.norm_sq[static_cast<std::size_t>(i)]);
    EXPECT_GT(b.norm_sq[static_cast<std::size_t>(i)], q(0));
    for (int j = 0; j < i; ++j) EXPECT_TRUE(inner_product(pi, b.psi[static_cast<std::size_t>(j)], n).is_zero());
  }
}

TEST(Gram, RejectsDegenerateDegree) {
  EXPECT_THROW(build_basis_gs(4, 4), DomainError);
  EXPECT_THROW(build_basis_recurrence(3, 5), DomainError);
  EXPECT_THROW(build_basis_gs(0, 0), DomainError);
}

TEST(Gram, Expansion) {
  const OrthoBasis b4 = build_basis_recurrence(4, 2);
  const GramExpansion e = gram_expand(Polynomial::monomial(2), b4);
  EXPECT_EQ(e.psi_coeffs, (std::vector<Rational>{q(5, 16), q(0), q(1)}));
  EXPECT_EQ(e.normalized_coeff_sq, (std::vector<Rational>{q(25, 256), q(0), q(1, 16)}));
  EXPECT_EQ(e.reconstruct(b4), Polynomial::monomial(2));
  EXPECT_EQ(gram_expand(b4.psi[2], b4).psi_coeffs, (std::vector<Rational>{q(0), q(0), q(1)}));

  const GramExpansion e2 = gram_expand(x, build_basis_recurrence(2, 1));
  EXPECT_EQ(e2.psi_coeffs, (std::vector<Rational>{q(0), q(1)}));
  EXPECT_EQ(e2.normalized_coeff_sq[1], q(1, 4));
  EXPECT_THROW(gram_expand(Polynomial::monomial(3), b4), DomainError);
}

TEST(Gram, LeadingCoefficient) {
  EXPECT_EQ(monomial_leading_coeff_sq(2, 1), q(1, 4));
  EXPECT_EQ(monomial_leading_coeff_sq(4, 2), q(1, 16));
  EXPECT_EQ(monomial_leading_coeff_sq(4, 1), q(5, 16));
  EXPECT_THROW(monomial_leading_coeff_sq(4, 4), DomainError);
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) EXPECT_EQ(monomial_leading_coeff_sq(n, k), leading_coeff_sq_product(n, k));
  }
}

TEST(Gram, L2Projection) {
  const L2Approx a = l2_best_approx(Polynomial::monomial(2), build_basis_recurrence(4, 2), 1);
  EXPECT_EQ(a.approximant, Polynomial::constant(q(5, 16)));
  EXPECT_EQ(a.error_sq, q(1, 16));

  const L2Approx b = l2_best_approx(x, build_basis_recurrence(2, 1), 0);
  EXPECT_TRUE(b.approximant.is_zero());
  EXPECT_EQ(b.error_sq, q(1, 4));

  const OrthoBasis b4 = build_basis_recurrence(4, 2);
  const L2Approx c = l2_best_approx(b4.psi[2], b4, 2);
  EXPECT_EQ(c.approximant, b4.psi[2]);
  EXPECT_TRUE(c.error_sq.is_zero());
}

}  // namespace
}  // namespace kwise
