#pragma once

#include <span>
#include <vector>

#include "kwise/rational.hpp"

namespace kwise {

/// Symmetric distribution over {0,1}^n, stored as its Hamming-weight mass
/// function pmf[m], m = 0..n. Masses are nonnegative and sum to one.
class SymmetricDist {
 public:
  explicit SymmetricDist(std::vector<Rational> pmf);

  static SymmetricDist point_mass(int n, int m);
  /// Normalizes nonnegative weights into a distribution.
  static SymmetricDist from_weights(std::vector<Rational> weights);

  int n() const { return static_cast<int>(pmf_.size()) - 1; }
  std::span<const Rational> pmf() const { return pmf_; }
  const Rational& mass(int m) const { return pmf_.at(static_cast<std::size_t>(m)); }

  friend bool operator==(const SymmetricDist&, const SymmetricDist&) = default;

 private:
  std::vector<Rational> pmf_;
};

/// Symmetric Boolean test on k bits: accepts iff the observed weight is in
/// accept_weights (sorted, distinct, within 0..k).
struct SymmetricTestSet {
  int k = 0;
  std::vector<int> accept_weights;

  SymmetricTestSet() = default;
  SymmetricTestSet(int k, std::vector<int> weights);

  /// Test whose accept set is the bits of mask (bit w set => accept w).
  static SymmetricTestSet from_mask(int k, unsigned long mask);

  bool accepts(int w) const;

  friend bool operator==(const SymmetricTestSet&, const SymmetricTestSet&) = default;
};

/// Weight distribution of the restriction to any k coordinates.
SymmetricDist marginal(const SymmetricDist& dist, int k);

/// E[C(|X|, i)].
Rational factorial_moment(const SymmetricDist& dist, int i);

/// True iff all factorial moments of order 1..j agree, i.e. every marginal
/// on at most j coordinates agrees. j = 0 imposes nothing.
bool is_jwise_indist(const SymmetricDist& mu, const SymmetricDist& nu, int j);

/// (1/2) sum |mu(m) - nu(m)|.
Rational tv_distance(const SymmetricDist& mu, const SymmetricDist& nu);

struct BestTest {
  SymmetricTestSet test;
  Rational advantage;
};

/// Accepts exactly the weights where mu_k puts more mass than nu_k; its
/// advantage equals tv_distance(mu_k, nu_k).
BestTest best_symmetric_test(const SymmetricDist& mu_k, const SymmetricDist& nu_k);

/// |E_mu[T(X|_S)] - E_nu[T(Y|_S)]| for |S| = k.
Rational advantage(const SymmetricDist& mu, const SymmetricDist& nu, const SymmetricTestSet& test,
                   int k);

}  // namespace kwise
