#include <gtest/gtest.h>

#include "kwise/error.hpp"
#include "kwise/extremal.hpp"

namespace kwise {
namespace {

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

TEST(Extremal, BoundB) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(bound_B_sq(n, 0), q(1));
    EXPECT_EQ(bound_B_sq(n, n), q(1));
  }
  EXPECT_EQ(bound_B_sq(4, 2), q(729, 4096));
}

TEST(Extremal, PairForTest) {
  const ExtremalPair p = extremal_pair_for_test(4, 2, 1);
  EXPECT_EQ(p.advantage, q(2, 3));
  EXPECT_EQ(p.mu, SymmetricDist::point_mass(4, 2));
  EXPECT_EQ(p.nu, SymmetricDist({q(1, 2), q(0), q(0), q(0), q(1, 2)}));
  EXPECT_TRUE(is_jwise_indist(p.mu, p.nu, 1));
  EXPECT_EQ(advantage(p.mu, p.nu, p.test, 2), p.advantage);

  const ExtremalPair r = extremal_pair_for_test(2, 1, 1);
  EXPECT_EQ(r.advantage, q(1));
  EXPECT_EQ(r.mu, SymmetricDist::point_mass(2, 2));
  EXPECT_EQ(r.nu, SymmetricDist::point_mass(2, 0));
  EXPECT_THROW(extremal_pair_for_test(4, 5, 1), DomainError);
  EXPECT_THROW(extremal_pair_for_test(4, 2, 3), DomainError);
}

TEST(Extremal, FullyConstrainedRegion) {
  // Moments up to order n pin the distribution, so only mu = nu is feasible.
  for (int n = 1; n <= 5; ++n) {
    IndistinguishablePairs region(n, n);
    std::vector<Rational> values(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) values[static_cast<std::size_t>(m)] = q(m * m + 1);
    EXPECT_TRUE(region.maximize(values).value.is_zero());
  }
}

TEST(Extremal, Duality) {
  const DualityReport a = duality_check(4, 2, 1);
  EXPECT_EQ(a.lp_advantage, q(2, 3));
  EXPECT_EQ(a.approx_error, q(1, 3));
  EXPECT_TRUE(a.holds);
  const DualityReport b = duality_check(2, 1, 1);
  EXPECT_EQ(b.lp_advantage, q(1));
  EXPECT_EQ(b.approx_error, q(1, 2));
  for (int n = 1; n <= 6; ++n) {
    for (int w = 0; w <= n; ++w) EXPECT_TRUE(duality_check(n, n, w).holds) << n << "," << w;
  }
}

TEST(Extremal, TotalVariation) {
  const TvResult a = extremal_tv(4, 2, TvMode::kEnumerate);
  EXPECT_EQ(a.tv, q(2, 3));
  EXPECT_EQ(a.pair.test.accept_weights, (std::vector<int>{1}));
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(extremal_tv(2, 2, TvMode::kEnumerate).tv, q(1));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(extremal_tv(n, 1, TvMode::kEnumerate).tv, q(1));
  EXPECT_THROW(extremal_tv(12, 11, TvMode::kEnumerate), DomainError);
  EXPECT_EQ(parse_tv_mode("alternate"), TvMode::kAlternate);
  EXPECT_THROW(parse_tv_mode("exhaustive"), DomainError);
}

TEST(Extremal, AlternateNeverExceedsEnumerate) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const TvResult e = extremal_tv(n, k, TvMode::kEnumerate);
      const TvResult a = extremal_tv(n, k, TvMode::kAlternate);
      EXPECT_LE(a.tv, e.tv);
      EXPECT_FALSE(a.exact);
      EXPECT_TRUE(is_jwise_indist(a.pair.mu, a.pair.nu, k - 1));
      EXPECT_EQ(tv_distance(marginal(e.pair.mu, k), marginal(e.pair.nu, k)), e.tv);
    }
  }
}

TEST(Extremal, Sandwich) {
  const BoundReport a = verify_sandwich(4, 2);
  EXPECT_EQ(a.bound_sq, q(729, 4096));
  EXPECT_EQ(a.lp_advantage, q(2, 3));
  EXPECT_EQ(a.tv_star, q(2, 3));
  EXPECT_TRUE(a.lower_bound_holds.value());
  EXPECT_TRUE(a.decomposition_holds);
  EXPECT_TRUE(a.slack_holds);
  EXPECT_TRUE(a.duality_holds);
  // TV*/B = (2/3)/(27/64).
  EXPECT_EQ(a.tv_star * a.tv_star / a.bound_sq, q(128, 81) * q(128, 81));

  const BoundReport b = verify_sandwich(2, 2);
  EXPECT_EQ(b.bound_sq, q(1));
  EXPECT_EQ(b.lp_advantage, q(1));
  EXPECT_EQ(b.tv_star, q(1));

  const BoundReport c = verify_sandwich(5, 0);
  EXPECT_TRUE(c.tv_star.is_zero());
  EXPECT_FALSE(c.lower_bound_holds.has_value());
  EXPECT_TRUE(c.decomposition_holds);
  EXPECT_TRUE(c.slack_holds);
}

}  // namespace
}  // namespace kwise
