#include "kwise/extremal.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "kwise/approx.hpp"
#include "kwise/combinatorics.hpp"
#include "kwise/error.hpp"
#include "kwise/grid.hpp"
#include "kwise/symmetrize.hpp"

namespace kwise {

namespace {

std::vector<lp::Constraint> indist_constraints(int n, int level) {
  if (n < 1) throw DomainError("pair LP needs n >= 1");
  if (level < 0 || level > n) throw DomainError("indistinguishability level must be in 0..n");
  const std::size_t nv = 2 * (static_cast<std::size_t>(n) + 1);
  const std::size_t off = static_cast<std::size_t>(n) + 1;
  std::vector<lp::Constraint> rows;
  rows.reserve(static_cast<std::size_t>(level) + 2);
  lp::Constraint mu_sum{std::vector<Rational>(nv), lp::Sense::kEqual, Rational(1)};
  lp::Constraint nu_sum{std::vector<Rational>(nv), lp::Sense::kEqual, Rational(1)};
  for (std::size_t m = 0; m < off; ++m) {
    mu_sum.coeffs[m] = Rational(1);
    nu_sum.coeffs[off + m] = Rational(1);
  }
  rows.push_back(std::move(mu_sum));
  rows.push_back(std::move(nu_sum));
  for (int i = 1; i <= level; ++i) {
    lp::Constraint moment{std::vector<Rational>(nv), lp::Sense::kEqual, Rational(0)};
    for (int m = i; m <= n; ++m) {
      Rational c(binomial(m, i));
      moment.coeffs[static_cast<std::size_t>(m)] = c;
      moment.coeffs[off + static_cast<std::size_t>(m)] = -c;
    }
    rows.push_back(std::move(moment));
  }
  return rows;
}

void check_nk(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("needs 1 <= k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                      ")");
  }
}

ExtremalPair finish_pair(int n, int k, IndistinguishablePairs::Optimum opt,
                         SymmetricTestSet test) {
  ExtremalPair pair{n, k, std::move(opt.mu), std::move(opt.nu), std::move(test),
                    std::move(opt.value), k - 1};
  if (!is_jwise_indist(pair.mu, pair.nu, k - 1)) {
    throw InternalError("pair LP returned a pair that is not (k-1)-wise indistinguishable");
  }
  if (advantage(pair.mu, pair.nu, pair.test, k) != pair.advantage) {
    throw InternalError("pair LP objective disagrees with the recomputed advantage");
  }
  return pair;
}

}  // namespace

IndistinguishablePairs::IndistinguishablePairs(int n, int level)
    : n_(n), level_(level), lp_(2 * (static_cast<std::size_t>(n) + 1), indist_constraints(n, level)) {
  if (!lp_.feasible()) throw InternalError("indistinguishable-pair LP infeasible (mu = nu is feasible)");
}

IndistinguishablePairs::Optimum IndistinguishablePairs::maximize(std::span<const Rational> values) {
  const std::size_t off = static_cast<std::size_t>(n_) + 1;
  if (values.size() != off) throw DomainError("objective needs n+1 values");
  std::vector<Rational> c(2 * off);
  for (std::size_t m = 0; m < off; ++m) {
    c[m] = values[m];
    c[off + m] = -values[m];
  }
  lp::Solution sol = lp_.maximize(c);
  if (sol.status != lp::Status::kOptimal) {
    throw InternalError("pair LP did not reach an optimum (bounded, feasible region)");
  }
  std::vector<Rational> mu(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(off));
  std::vector<Rational> nu(sol.x.begin() + static_cast<std::ptrdiff_t>(off), sol.x.end());
  return {SymmetricDist(std::move(mu)), SymmetricDist(std::move(nu)), std::move(sol.objective)};
}

Rational bound_B_sq(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw DomainError("bound_B_sq needs 0 <= k <= n");
  mpz_class num = int_pow(n - k, n - k) * int_pow(n + k, n + k);
  mpz_class den = int_pow(4, k) * int_pow(n, 2 * n);
  return Rational(num, den);
}

std::vector<Rational> test_acceptance_values(int n, const SymmetricTestSet& test) {
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    for (int w : test.accept_weights) v[static_cast<std::size_t>(m)] += hypergeometric_pmf(n, test.k, m, w);
  }
  return v;
}

ExtremalPair extremal_pair_for_test(int n, int k, int w) {
  check_nk(n, k);
  if (w < 0 || w > k) throw DomainError("extremal_pair_for_test needs 0 <= w <= k");
  const SymmetrizedTest pw = build_pw(n, k, w);
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) values.push_back(pw.poly(weight_to_point(n, m)));
  IndistinguishablePairs region(n, k - 1);
  return finish_pair(n, k, region.maximize(values), SymmetricTestSet(k, {w}));
}

ExtremalPair extremal_pair_for_set(int n, int k, const SymmetricTestSet& test) {
  check_nk(n, k);
  if (test.k != k) throw DomainError("test arity differs from k");
  IndistinguishablePairs region(n, k - 1);
  return finish_pair(n, k, region.maximize(test_acceptance_values(n, test)), test);
}

DualityReport duality_check(int n, int k, int w) {
  check_nk(n, k);
  DualityReport r{n, k, w, {}, {}, false};
  r.lp_advantage = extremal_pair_for_test(n, k, w).advantage;
  const SymmetrizedTest pw = build_pw(n, k, w);
  r.approx_error = linf_best_approx(pw.poly, grid_points(GridKind::kOut, n), k - 1).epsilon;
  r.holds = r.lp_advantage == Rational(2) * r.approx_error;
  return r;
}

std::string_view to_string(TvMode mode) {
  return mode == TvMode::kEnumerate ? "enumerate" : "alternate";
}

TvMode parse_tv_mode(std::string_view text) {
  if (text == "enumerate" || text == "ENUMERATE") return TvMode::kEnumerate;
  if (text == "alternate" || text == "ALTERNATE") return TvMode::kAlternate;
  throw DomainError("unknown TV mode '" + std::string(text) + "' (expected enumerate|alternate)");
}

TvResult extremal_tv(int n, int k, TvMode mode) {
  check_nk(n, k);
  IndistinguishablePairs region(n, k - 1);
  std::size_t solves = 0;

  if (mode == TvMode::kEnumerate) {
    if (k > kMaxEnumerateK) {
      throw DomainError("ENUMERATE supports k <= " + std::to_string(kMaxEnumerateK) +
                        ", got k=" + std::to_string(k));
    }
    // Gray-code order keeps consecutive objectives one weight apart, which
    // keeps the warm-started phase two short. Ties go to the smallest mask.
    const unsigned long count = 1UL << (k + 1);
    std::optional<IndistinguishablePairs::Optimum> best;
    unsigned long best_mask = 0;
    for (unsigned long i = 0; i < count; ++i) {
      const unsigned long mask = i ^ (i >> 1);
      if (mask == 0 || mask == count - 1) continue;  // advantage 0 by total mass
      auto opt = region.maximize(test_acceptance_values(n, SymmetricTestSet::from_mask(k, mask)));
      ++solves;
      if (!best || opt.value > best->value || (opt.value == best->value && mask < best_mask)) {
        best = std::move(opt);
        best_mask = mask;
      }
    }
    SymmetricDist mu = best ? best->mu : SymmetricDist::point_mass(n, 0);
    SymmetricDist nu = best ? best->nu : SymmetricDist::point_mass(n, 0);
    BestTest bt = best_symmetric_test(marginal(mu, k), marginal(nu, k));
    Rational tv = bt.advantage;
    return {finish_pair(n, k, {std::move(mu), std::move(nu), tv}, std::move(bt.test)), tv, mode,
            true, solves};
  }

  // ALTERNATE: best single-weight test, then LP <-> best-test to a fixpoint.
  std::optional<IndistinguishablePairs::Optimum> cur;
  for (int w = 0; w <= k; ++w) {
    auto opt = region.maximize(test_acceptance_values(n, SymmetricTestSet(k, {w})));
    ++solves;
    if (!cur || opt.value > cur->value) cur = std::move(opt);
  }
  BestTest bt = best_symmetric_test(marginal(cur->mu, k), marginal(cur->nu, k));
  for (;;) {
    auto opt = region.maximize(test_acceptance_values(n, bt.test));
    ++solves;
    if (opt.value <= bt.advantage) break;
    cur = std::move(opt);
    bt = best_symmetric_test(marginal(cur->mu, k), marginal(cur->nu, k));
  }
  Rational tv = bt.advantage;
  return {finish_pair(n, k, {std::move(cur->mu), std::move(cur->nu), tv}, std::move(bt.test)), tv,
          mode, false, solves};
}

BoundReport verify_sandwich(int n, int k, int slack_cap) {
  if (n < 1 || k < 0 || k > n) throw DomainError("verify_sandwich needs 0 <= k <= n");
  BoundReport r;
  r.n = n;
  r.k = k;
  r.slack_cap = slack_cap;
  r.bound_sq = bound_B_sq(n, k);
  if (k == 0) {
    // Zero observed bits: every quantity vanishes and nothing is claimed.
    r.lp_by_w = {Rational(0)};
    r.tv_exact = true;
    r.decomposition_holds = true;
    r.slack_holds = true;
    r.duality_holds = true;
    return r;
  }

  IndistinguishablePairs region(n, k - 1);
  r.lp_by_w.reserve(static_cast<std::size_t>(k) + 1);
  int argmax = 0;
  for (int w = 0; w <= k; ++w) {
    const SymmetrizedTest pw = build_pw(n, k, w);
    std::vector<Rational> values;
    for (int m = 0; m <= n; ++m) values.push_back(pw.poly(weight_to_point(n, m)));
    r.lp_by_w.push_back(region.maximize(values).value);
    if (r.lp_by_w.back() > r.lp_by_w[static_cast<std::size_t>(argmax)]) argmax = w;
  }
  r.max_lp_advantage = r.lp_by_w[static_cast<std::size_t>(argmax)];
  r.reference_w = k % 2 == 0 ? k / 2 : argmax;
  r.lp_advantage = r.lp_by_w[static_cast<std::size_t>(r.reference_w)];
  r.approx_error =
      linf_best_approx(build_pw(n, k, r.reference_w).poly, grid_points(GridKind::kOut, n), k - 1)
          .epsilon;
  r.duality_holds = r.lp_advantage == Rational(2) * r.approx_error;

  TvResult tv = extremal_tv(n, k, k <= kMaxEnumerateK ? TvMode::kEnumerate : TvMode::kAlternate);
  r.tv_star = tv.tv;
  r.tv_exact = tv.exact;

  if (k % 2 == 0) r.lower_bound_holds = r.lp_advantage * r.lp_advantage >= r.bound_sq;
  r.decomposition_holds = r.tv_star <= Rational(k + 1) * r.max_lp_advantage;
  r.slack_holds = r.tv_star * r.tv_star <= Rational(int_pow(n, 2 * slack_cap)) * r.bound_sq;
  if (n > 1 && !r.tv_star.is_zero()) {
    const double log_ratio_sq = std::log(r.tv_star.to_double() * r.tv_star.to_double()) -
                                std::log(r.bound_sq.to_double());
    r.measured_c = 0.5 * log_ratio_sq / std::log(static_cast<double>(n));
  }
  return r;
}

}  // namespace kwise
