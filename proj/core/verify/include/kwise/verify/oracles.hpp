#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "kwise/distributions.hpp"
#include "kwise/rational.hpp"

namespace kwise::verify {

/// Largest j such that mu and nu have identical marginals on every set of
/// at most j coordinates, found by expanding both distributions over all
/// 2^n strings and comparing restrictions to every coordinate subset.
/// Independent of the factorial-moment route. Requires n <= 12.
int subset_oracle_level(const SymmetricDist& mu, const SymmetricDist& nu);

/// Rational bracket lo < pi < hi from Machin's formula
/// pi = 16 atan(1/5) - 4 atan(1/239), with alternating-series error bounds.
struct PiBracket {
  Rational lo;
  Rational hi;
};
PiBracket pi_bracket(int terms);

/// Random pair (mu, nu) over {0,1}^n that is exactly `level`-wise
/// indistinguishable: nu has positive random masses and mu adds a scaled
/// combination of order-(level+1) finite-difference kernels, which
/// annihilate every polynomial of degree <= level in the weight.
/// level >= n gives mu == nu.
std::pair<SymmetricDist, SymmetricDist> random_indist_pair(int n, int level, std::mt19937_64& rng);

/// Independent random pair (generically distinguishable at level 1).
std::pair<SymmetricDist, SymmetricDist> random_pair(int n, std::mt19937_64& rng);

}  // namespace kwise::verify
