#include "kwise/distributions.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "kwise/combinatorics.hpp"
#include "kwise/error.hpp"
#include "kwise/symmetrize.hpp"

namespace kwise {

namespace {

void check_same_n(const SymmetricDist& a, const SymmetricDist& b) {
  if (a.n() != b.n()) {
    throw DomainError("distributions over different lengths: " + std::to_string(a.n()) +
                      " vs " + std::to_string(b.n()));
  }
}

}  // namespace

SymmetricDist::SymmetricDist(std::vector<Rational> pmf) : pmf_(std::move(pmf)) {
  if (pmf_.size() < 2) throw DomainError("a symmetric distribution needs n >= 1");
  Rational total;
  for (const auto& p : pmf_) {
    if (p.sign() < 0) throw DomainError("negative mass " + p.str());
    total += p;
  }
  if (total != Rational(1)) throw DomainError("masses sum to " + total.str() + ", not 1");
}

SymmetricDist SymmetricDist::point_mass(int n, int m) {
  if (n < 1 || m < 0 || m > n) throw DomainError("point_mass needs 0 <= m <= n, n >= 1");
  std::vector<Rational> pmf(static_cast<std::size_t>(n) + 1);
  pmf[static_cast<std::size_t>(m)] = Rational(1);
  return SymmetricDist(std::move(pmf));
}

SymmetricDist SymmetricDist::from_weights(std::vector<Rational> weights) {
  Rational total;
  for (const auto& w : weights) total += w;
  if (total.sign() <= 0) throw DomainError("weights must have positive total");
  for (auto& w : weights) w /= total;
  return SymmetricDist(std::move(weights));
}

SymmetricTestSet::SymmetricTestSet(int k_, std::vector<int> weights)
    : k(k_), accept_weights(std::move(weights)) {
  if (k < 0) throw DomainError("test arity must be >= 0");
  std::sort(accept_weights.begin(), accept_weights.end());
  accept_weights.erase(std::unique(accept_weights.begin(), accept_weights.end()),
                       accept_weights.end());
  for (int w : accept_weights) {
    if (w < 0 || w > k) {
      throw DomainError("accept weight " + std::to_string(w) + " outside 0.." +
                        std::to_string(k));
    }
  }
}

SymmetricTestSet SymmetricTestSet::from_mask(int k, unsigned long mask) {
  std::vector<int> ws;
  for (int w = 0; w <= k; ++w) {
    if ((mask >> w) & 1UL) ws.push_back(w);
  }
  return SymmetricTestSet(k, std::move(ws));
}

bool SymmetricTestSet::accepts(int w) const {
  return std::binary_search(accept_weights.begin(), accept_weights.end(), w);
}

SymmetricDist marginal(const SymmetricDist& dist, int k) {
  const int n = dist.n();
  if (k < 1 || k > n) {
    throw DomainError("marginal needs 1 <= k <= n (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  }
  std::vector<Rational> out(static_cast<std::size_t>(k) + 1);
  for (int m = 0; m <= n; ++m) {
    const Rational& p = dist.mass(m);
    if (p.is_zero()) continue;
    for (int w = std::max(0, m - (n - k)); w <= std::min(k, m); ++w) {
      out[static_cast<std::size_t>(w)] += p * hypergeometric_pmf(n, k, m, w);
    }
  }
  return SymmetricDist(std::move(out));
}

Rational factorial_moment(const SymmetricDist& dist, int i) {
  if (i < 0 || i > dist.n()) throw DomainError("factorial_moment needs 0 <= i <= n");
  Rational sum;
  for (int m = i; m <= dist.n(); ++m) {
    if (!dist.mass(m).is_zero()) sum += dist.mass(m) * Rational(binomial(m, i));
  }
  return sum;
}

bool is_jwise_indist(const SymmetricDist& mu, const SymmetricDist& nu, int j) {
  check_same_n(mu, nu);
  if (j < 0 || j > mu.n()) throw DomainError("is_jwise_indist needs 0 <= j <= n");
  for (int i = 1; i <= j; ++i) {
    if (factorial_moment(mu, i) != factorial_moment(nu, i)) return false;
  }
  return true;
}

Rational tv_distance(const SymmetricDist& mu, const SymmetricDist& nu) {
  check_same_n(mu, nu);
  Rational sum;
  for (int m = 0; m <= mu.n(); ++m) sum += (mu.mass(m) - nu.mass(m)).abs();
  return sum / Rational(2);
}

BestTest best_symmetric_test(const SymmetricDist& mu_k, const SymmetricDist& nu_k) {
  check_same_n(mu_k, nu_k);
  std::vector<int> ws;
  Rational adv;
  for (int w = 0; w <= mu_k.n(); ++w) {
    if (mu_k.mass(w) > nu_k.mass(w)) {
      ws.push_back(w);
      adv += mu_k.mass(w) - nu_k.mass(w);
    }
  }
  return {SymmetricTestSet(mu_k.n(), std::move(ws)), adv};
}

Rational advantage(const SymmetricDist& mu, const SymmetricDist& nu, const SymmetricTestSet& test,
                   int k) {
  check_same_n(mu, nu);
  if (test.k != k) {
    throw DomainError("test reads " + std::to_string(test.k) + " bits, expected " +
                      std::to_string(k));
  }
  const SymmetricDist mk = marginal(mu, k);
  const SymmetricDist nk = marginal(nu, k);
  Rational diff;
  for (int w : test.accept_weights) diff += mk.mass(w) - nk.mass(w);
  return diff.abs();
}

}  // namespace kwise
