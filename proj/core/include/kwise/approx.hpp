#pragma once

#include <vector>

#include "kwise/grid.hpp"
#include "kwise/polynomial.hpp"
#include "kwise/rational.hpp"

namespace kwise {

/// A grid point where |target - approximant| attains epsilon; sign is that
/// of the residual.
struct ActivePoint {
  Rational point;
  int sign = 0;

  friend bool operator==(const ActivePoint&, const ActivePoint&) = default;
};

/// Degree-bounded approximation of `target` over a grid, with its exact
/// max-error and residuals. `optimal` marks certificates produced by the
/// minimax LP; constructive approximations carry their realized error.
struct ApproxCertificate {
  Polynomial target;
  Grid grid;
  int degree_bound = 0;
  Polynomial approximant;
  Rational epsilon;
  /// target(t) - approximant(t), aligned with grid.points.
  std::vector<Rational> residuals;
  /// Points with |residual| == epsilon, in grid order. Empty when epsilon
  /// is zero.
  std::vector<ActivePoint> active;
  bool optimal = false;

  /// Longest run of active points with alternating signs. For an optimal
  /// certificate with epsilon > 0 this is at least degree_bound + 2.
  std::size_t alternation_length() const;

  /// Recomputes residuals and epsilon from the approximant and compares.
  bool integrity_holds() const;
};

/// Builds a certificate (residuals, epsilon, active set) for a given
/// approximant. Rejects approximants above the degree bound.
ApproxCertificate make_certificate(const Polynomial& target, const Grid& grid, int degree_bound,
                                   const Polynomial& approximant, bool optimal);

/// min over deg-<=`deg` q of max_{t in grid} |target(t) - q(t)|, solved
/// exactly as a linear program in the monomial coefficients of q and the
/// error bound.
ApproxCertificate linf_best_approx(const Polynomial& target, const Grid& grid, int deg);

/// Degree-<=k-1 approximation to x^k over OUT_n obtained by expanding
/// ((n+1)/n x)^k in the Gram basis with parameter n+1, dropping the top
/// term, and pulling back through the stretch map. Requires 1 <= k <= n.
ApproxCertificate monomial_gram_truncation(int n, int k);

/// Turns an approximation over OUT_n into one over IN_n with no larger
/// error: q(t) = p~(t + 1/n) + p(t) - p(t + 1/n).
/// Requires deg(target) <= cert_out.degree_bound + 1.
ApproxCertificate shift_reduce(const Polynomial& target, const ApproxCertificate& cert_out);

/// 2^(1-k): best uniform error for x^k on [-1, 1] by degree < k.
Rational uniform_reference_error(int k);

/// (2n)^(-2k) (n+k)! / (n-k)!, the square of the closed-form hardness
/// reference for x^k over OUT_n. Requires 1 <= k < n. Reporting only.
Rational monomial_hardness_ref_sq(int n, int k);

/// (2(n+1))^(-2k) (n+k+1)! / (n-k+1)!, the square of the closed-form error
/// scale of the Gram truncation. Requires 1 <= k <= n. Reporting only.
Rational monomial_truncation_ref_sq(int n, int k);

}  // namespace kwise
