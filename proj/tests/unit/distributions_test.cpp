#include <gtest/gtest.h>

#include <random>

#include "kwise/distributions.hpp"
#include "kwise/error.hpp"
#include "kwise/verify/oracles.hpp"

namespace kwise {
namespace {

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

SymmetricDist d(std::vector<Rational> pmf) { return SymmetricDist(std::move(pmf)); }
const SymmetricDist delta2 = SymmetricDist::point_mass(4, 2);
const SymmetricDist ends = d({q(1, 2), q(0), q(0), q(0), q(1, 2)});

TEST(Distributions, Validation) {
  EXPECT_THROW(d({q(1, 2), q(1, 3)}), DomainError);
  EXPECT_THROW(d({q(3, 2), q(-1, 2)}), DomainError);
  EXPECT_THROW(d({}), DomainError);
  EXPECT_EQ(SymmetricDist::from_weights({q(1), q(3)}), d({q(1, 4), q(3, 4)}));
  EXPECT_THROW(SymmetricTestSet(2, {3}), DomainError);
  EXPECT_EQ(SymmetricTestSet(3, {2, 0, 2}).accept_weights, (std::vector<int>{0, 2}));
  EXPECT_EQ(SymmetricTestSet::from_mask(3, 0b1010).accept_weights, (std::vector<int>{1, 3}));
}

TEST(Distributions, Marginal) {
  EXPECT_EQ(marginal(delta2, 2), d({q(1, 6), q(2, 3), q(1, 6)}));
  EXPECT_EQ(marginal(ends, 2), d({q(1, 2), q(0), q(1, 2)}));
  EXPECT_EQ(marginal(ends, 4), ends);
  EXPECT_THROW(marginal(ends, 5), DomainError);
  // Marginals compose.
  EXPECT_EQ(marginal(marginal(delta2, 3), 2), marginal(delta2, 2));
}

TEST(Distributions, Moments) {
  EXPECT_EQ(factorial_moment(delta2, 1), q(2));
  EXPECT_EQ(factorial_moment(ends, 1), q(2));
  EXPECT_EQ(factorial_moment(ends, 2), q(3));
  EXPECT_TRUE(is_jwise_indist(delta2, ends, 1));
  EXPECT_FALSE(is_jwise_indist(delta2, ends, 2));
  EXPECT_TRUE(is_jwise_indist(ends, ends, 4));
  EXPECT_THROW(is_jwise_indist(ends, SymmetricDist::point_mass(3, 1), 1), DomainError);
}

TEST(Distributions, TotalVariation) {
  EXPECT_EQ(tv_distance(d({q(1, 6), q(2, 3), q(1, 6)}), d({q(1, 2), q(0), q(1, 2)})), q(2, 3));
  EXPECT_TRUE(tv_distance(ends, ends).is_zero());
  EXPECT_EQ(tv_distance(SymmetricDist::point_mass(5, 0), SymmetricDist::point_mass(5, 5)), q(1));
}

TEST(Distributions, BestTest) {
  const BestTest a = best_symmetric_test(d({q(1, 6), q(2, 3), q(1, 6)}), d({q(1, 2), q(0), q(1, 2)}));
  EXPECT_EQ(a.test.accept_weights, (std::vector<int>{1}));
  EXPECT_EQ(a.advantage, q(2, 3));
  const BestTest b = best_symmetric_test(ends, ends);
  EXPECT_TRUE(b.test.accept_weights.empty());
  EXPECT_TRUE(b.advantage.is_zero());
  const BestTest c = best_symmetric_test(d({q(1), q(0)}), d({q(0), q(1)}));
  EXPECT_EQ(c.test.accept_weights, (std::vector<int>{0}));
  EXPECT_EQ(c.advantage, q(1));
}

TEST(Distributions, Advantage) {
  EXPECT_EQ(advantage(delta2, ends, SymmetricTestSet(2, {1}), 2), q(2, 3));
  EXPECT_TRUE(advantage(delta2, ends, SymmetricTestSet(2, {0, 1, 2}), 2).is_zero());
  const SymmetricDist xor_mu = d({q(0), q(1), q(0)});
  const SymmetricDist xor_nu = d({q(1, 2), q(0), q(1, 2)});
  EXPECT_EQ(advantage(xor_mu, xor_nu, SymmetricTestSet(2, {1}), 2), q(1));
  EXPECT_THROW(advantage(delta2, ends, SymmetricTestSet(3, {1}), 2), DomainError);
}

// No symmetric test beats the best one, which equals the marginal TV distance.
TEST(Distributions, BestTestDominatesRandomPairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 4;
    const auto [mu, nu] = verify::random_pair(n, rng);
    const int k = 1 + trial % n;
    const BestTest best = best_symmetric_test(marginal(mu, k), marginal(nu, k));
    EXPECT_EQ(best.advantage, tv_distance(marginal(mu, k), marginal(nu, k)));
    for (unsigned long mask = 0; mask < (1UL << (k + 1)); ++mask) {
      EXPECT_LE(advantage(mu, nu, SymmetricTestSet::from_mask(k, mask), k), best.advantage);
    }
  }
}

}  // namespace
}  // namespace kwise
