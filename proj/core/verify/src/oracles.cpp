#include "kwise/verify/oracles.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "kwise/combinatorics.hpp"
#include "kwise/error.hpp"

namespace kwise::verify {

int subset_oracle_level(const SymmetricDist& mu, const SymmetricDist& nu) {
  if (mu.n() != nu.n()) throw DomainError("subset oracle needs equal lengths");
  const int n = mu.n();
  if (n > 12) throw DomainError("subset oracle is exponential; n <= 12");
  const unsigned strings = 1U << n;

  // Signed mass difference per string, scaled to integers by the common
  // denominator of (mu(m) - nu(m)) / C(n, m).
  std::vector<Rational> per_weight(static_cast<std::size_t>(n) + 1);
  mpz_class lcm = 1;
  for (int m = 0; m <= n; ++m) {
    per_weight[static_cast<std::size_t>(m)] = (mu.mass(m) - nu.mass(m)) / Rational(binomial(n, m));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
            per_weight[static_cast<std::size_t>(m)].denominator().get_mpz_t());
  }
  std::vector<mpz_class> diff(strings);
  for (unsigned x = 0; x < strings; ++x) {
    const Rational& d = per_weight[static_cast<std::size_t>(std::popcount(x))];
    diff[x] = d.numerator() * (lcm / d.denominator());
  }

  int first_bad = n + 1;  // smallest subset size with a differing marginal
  std::vector<mpz_class> marg;
  for (unsigned subset = 1; subset < strings; ++subset) {
    const int size = std::popcount(subset);
    if (size >= first_bad) continue;
    marg.assign(1U << size, mpz_class(0));
    for (unsigned x = 0; x < strings; ++x) {
      if (diff[x] == 0) continue;
      // Pack the bits of x selected by subset.
      unsigned pattern = 0;
      int pos = 0;
      for (unsigned s = subset; s; s &= s - 1) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(s));
        pattern |= ((x >> bit) & 1U) << pos++;
      }
      marg[pattern] += diff[x];
    }
    if (std::any_of(marg.begin(), marg.end(), [](const mpz_class& v) { return v != 0; })) {
      first_bad = size;
    }
  }
  // The empty set carries total mass, equal for two distributions.
  return first_bad - 1;
}

namespace {

// Partial sums of atan(1/x) = sum_i (-1)^i / ((2i+1) x^(2i+1)) after
// `terms` and `terms + 1` terms bracket the true value.
std::pair<Rational, Rational> atan_inv_bracket(long x, int terms) {
  Rational sum;
  Rational prev;
  Rational power = Rational(1) / Rational(x);
  const Rational x2(x * x);
  for (int i = 0; i <= terms; ++i) {
    prev = sum;
    Rational term = power / Rational(2 * i + 1);
    if (i % 2 == 0) sum += term;
    else sum -= term;
    power /= x2;
  }
  return prev < sum ? std::pair{prev, sum} : std::pair{sum, prev};
}

}  // namespace

PiBracket pi_bracket(int terms) {
  if (terms < 1) throw DomainError("pi_bracket needs at least one term");
  auto [lo5, hi5] = atan_inv_bracket(5, terms);
  auto [lo239, hi239] = atan_inv_bracket(239, terms);
  return {Rational(16) * lo5 - Rational(4) * hi239, Rational(16) * hi5 - Rational(4) * lo239};
}

namespace {

std::vector<Rational> random_positive_masses(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mass(1, 12);
  std::vector<Rational> w;
  for (int m = 0; m <= n; ++m) w.emplace_back(mass(rng));
  return w;
}

}  // namespace

std::pair<SymmetricDist, SymmetricDist> random_indist_pair(int n, int level, std::mt19937_64& rng) {
  SymmetricDist nu = SymmetricDist::from_weights(random_positive_masses(n, rng));
  if (level >= n) return {nu, nu};
  const int order = level + 1;  // kernel annihilates degree <= level
  std::vector<Rational> delta(static_cast<std::size_t>(n) + 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  bool nonzero = false;
  for (int s = 0; s + order <= n; ++s) {
    int c = coef(rng);
    if (c == 0) continue;
    nonzero = true;
    for (int i = 0; i <= order; ++i) {
      Rational v(binomial(order, i));
      if (i % 2) v = -v;
      delta[static_cast<std::size_t>(s + i)] += Rational(c) * v;
    }
  }
  if (!nonzero) {
    for (int i = 0; i <= order; ++i) {
      Rational v(binomial(order, i));
      delta[static_cast<std::size_t>(i)] += i % 2 ? -v : v;
    }
  }
  // Largest step keeping mu >= 0, then a random fraction of it.
  std::optional<Rational> limit;
  for (int m = 0; m <= n; ++m) {
    const auto& d = delta[static_cast<std::size_t>(m)];
    if (d.sign() >= 0) continue;
    Rational cap = nu.mass(m) / d.abs();
    if (!limit || cap < *limit) limit = cap;
  }
  if (!limit) return {nu, nu};  // all-zero delta
  std::uniform_int_distribution<int> frac(1, 8);
  Rational step = *limit * Rational(frac(rng), 8);
  std::vector<Rational> mu(nu.pmf().begin(), nu.pmf().end());
  for (int m = 0; m <= n; ++m) mu[static_cast<std::size_t>(m)] += step * delta[static_cast<std::size_t>(m)];
  return {SymmetricDist(std::move(mu)), nu};
}

std::pair<SymmetricDist, SymmetricDist> random_pair(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mass(0, 9);
  auto draw = [&] {
    std::vector<Rational> w;
    for (int m = 0; m <= n; ++m) w.emplace_back(mass(rng));
    if (std::all_of(w.begin(), w.end(), [](const Rational& r) { return r.is_zero(); })) w[0] = 1;
    return SymmetricDist::from_weights(std::move(w));
  };
  SymmetricDist a = draw();
  return {a, draw()};
}

}  // namespace kwise::verify
