#pragma once

#include <vector>

#include "kwise/polynomial.hpp"
#include "kwise/rational.hpp"

namespace kwise {

/// Monic discrete-orthogonal (Gram) family psi_0..psi_max_deg over IN_n
/// under (f, g) = (1/n) sum f(x) g(x), with exact squared norms
/// norm_sq[d] = (psi_d, psi_d). The unit-norm family is psi_d / sqrt(N_d);
/// anything involving it is carried as an exact square.
struct OrthoBasis {
  int n = 0;
  int max_deg = -1;
  std::vector<Polynomial> psi;
  std::vector<Rational> norm_sq;

  friend bool operator==(const OrthoBasis&, const OrthoBasis&) = default;
};

/// Gram-Schmidt on 1, x, x^2, ... over IN_n. Requires 0 <= max_deg <= n-1.
OrthoBasis build_basis_gs(int n, int max_deg);

/// alpha_{d-1}^2 = n^2 (d^2 - 1/4) / (d^2 (n^2 - d^2)), for 1 <= d <= n-1.
Rational alpha_sq(int n, int d);

/// Monic three-term recurrence:
///   psi_0 = 1, psi_1 = x, psi_d = x psi_{d-1} - b_d psi_{d-2},
///   b_d = N_{d-1} / N_{d-2} = 1 / (4 alpha_sq(n, d-1)),
/// with N_d = N_{d-1} / (4 alpha_sq(n, d)). Agrees with build_basis_gs exactly.
OrthoBasis build_basis_recurrence(int n, int max_deg);

/// Coefficients of a polynomial in the monic basis, plus the squares of the
/// unit-norm (Gram) coefficients c_d^2 = psi_coeffs[d]^2 * N_d.
struct GramExpansion {
  int n = 0;
  std::vector<Rational> psi_coeffs;
  std::vector<Rational> normalized_coeff_sq;

  Polynomial reconstruct(const OrthoBasis& basis) const;
};

/// Descending-degree elimination. Rejects deg p > basis.max_deg.
GramExpansion gram_expand(const Polynomial& p, const OrthoBasis& basis);

/// C^2 for the top Gram coefficient C of x^k with parameter n; equals N_k
/// since x^k = psi_k + lower terms. Requires 1 <= k <= n-1.
Rational monomial_leading_coeff_sq(int n, int k);

/// prod_{d=1}^{k} 1 / (4 alpha_sq(n, d)); the same quantity by the alpha route.
Rational leading_coeff_sq_product(int n, int k);

struct L2Approx {
  Polynomial approximant;
  /// (p - approximant, p - approximant) = sum_{d > deg} c_d^2.
  Rational error_sq;
};

/// Least-squares approximation of degree <= deg over IN_n by truncating the
/// Gram expansion. When deg >= deg p, returns p with zero error.
L2Approx l2_best_approx(const Polynomial& p, const OrthoBasis& basis, int deg);

}  // namespace kwise
