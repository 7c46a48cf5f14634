#include "kwise/approx.hpp"

#include <algorithm>
#include <string>

#include "kwise/combinatorics.hpp"
#include "kwise/error.hpp"
#include "kwise/gram.hpp"
#include "kwise/simplex.hpp"

namespace kwise {

std::size_t ApproxCertificate::alternation_length() const {
  std::size_t best = 0;
  std::size_t run = 0;
  int last = 0;
  for (const auto& a : active) {
    // Greedy: the longest alternating subsequence of a sign sequence counts
    // sign changes between consecutive entries.
    if (run == 0 || a.sign != last) {
      ++run;
      last = a.sign;
    }
    best = std::max(best, run);
  }
  return best;
}

bool ApproxCertificate::integrity_holds() const {
  if (approximant.degree() > degree_bound) return false;
  if (residuals.size() != grid.size()) return false;
  Rational worst;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Rational r = target(grid.points[i]) - approximant(grid.points[i]);
    if (r != residuals[i]) return false;
    worst = std::max(worst, r.abs());
  }
  return worst == epsilon;
}

ApproxCertificate make_certificate(const Polynomial& target, const Grid& grid, int degree_bound,
                                   const Polynomial& approximant, bool optimal) {
  if (approximant.degree() > degree_bound) {
    throw DomainError("approximant degree " + std::to_string(approximant.degree()) +
                        " exceeds bound " + std::to_string(degree_bound));
  }
  ApproxCertificate c{target, grid, degree_bound, approximant, Rational(), {}, {}, optimal};
  c.residuals.reserve(grid.size());
  for (const auto& t : grid.points) {
    Rational r = target(t) - approximant(t);
    c.epsilon = std::max(c.epsilon, r.abs());
    c.residuals.push_back(std::move(r));
  }
  if (!c.epsilon.is_zero()) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (c.residuals[i].abs() == c.epsilon) {
        c.active.push_back({grid.points[i], c.residuals[i].sign()});
      }
    }
  }
  return c;
}

ApproxCertificate linf_best_approx(const Polynomial& target, const Grid& grid, int deg) {
  if (deg < 0) throw DomainError("linf_best_approx needs deg >= 0");
  if (grid.size() == 0) throw DomainError("linf_best_approx needs a nonempty grid");

  // More coefficients than points cannot lower the optimum (interpolation
  // already reaches zero), so the LP uses at most |grid| of them.
  const int used = std::min(deg, static_cast<int>(grid.size()) - 1);
  const std::size_t coeffs = static_cast<std::size_t>(used) + 1;
  // Variables: q_j = u_j - v_j (j = 0..used), then eps. All >= 0.
  const std::size_t nv = 2 * coeffs + 1;
  const std::size_t eps = nv - 1;

  std::vector<lp::Constraint> rows;
  rows.reserve(2 * grid.size());
  for (const auto& t : grid.points) {
    const Rational f = target(t);
    std::vector<Rational> powers(coeffs);
    Rational p(1);
    for (std::size_t j = 0; j < coeffs; ++j) {
      powers[j] = p;
      p *= t;
    }
    // f - q(t) <= eps   <=>   -q(t) - eps <= -f
    lp::Constraint lower{std::vector<Rational>(nv), lp::Sense::kLessEqual, -f};
    // q(t) - f <= eps   <=>    q(t) - eps <= f
    lp::Constraint upper{std::vector<Rational>(nv), lp::Sense::kLessEqual, f};
    for (std::size_t j = 0; j < coeffs; ++j) {
      lower.coeffs[2 * j] = -powers[j];
      lower.coeffs[2 * j + 1] = powers[j];
      upper.coeffs[2 * j] = powers[j];
      upper.coeffs[2 * j + 1] = -powers[j];
    }
    lower.coeffs[eps] = Rational(-1);
    upper.coeffs[eps] = Rational(-1);
    rows.push_back(std::move(lower));
    rows.push_back(std::move(upper));
  }
  std::vector<Rational> objective(nv);
  objective[eps] = Rational(-1);

  lp::Solution sol = lp::maximize(nv, std::move(rows), objective);
  if (sol.status != lp::Status::kOptimal) {
    throw InternalError("minimax LP did not reach an optimum");
  }
  std::vector<Rational> q(coeffs);
  for (std::size_t j = 0; j < coeffs; ++j) q[j] = sol.x[2 * j] - sol.x[2 * j + 1];
  ApproxCertificate cert = make_certificate(target, grid, deg, Polynomial(std::move(q)), true);
  if (cert.epsilon != sol.x[eps]) {
    throw InternalError("minimax LP error " + sol.x[eps].str() +
                        " disagrees with the realized grid error " + cert.epsilon.str());
  }
  return cert;
}

ApproxCertificate monomial_gram_truncation(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("monomial_gram_truncation needs 1 <= k <= n");
  }
  const Rational s(n + 1, n);
  const Polynomial stretched = Polynomial::monomial(k).compose_affine(s, Rational(0));
  const OrthoBasis basis = build_basis_recurrence(n + 1, k);
  const GramExpansion e = gram_expand(stretched, basis);
  Polynomial truncated;
  for (int d = 0; d < k; ++d) {
    const auto& c = e.psi_coeffs[static_cast<std::size_t>(d)];
    if (!c.is_zero()) truncated += basis.psi[static_cast<std::size_t>(d)] * c;
  }
  Polynomial pulled = truncated.compose_affine(s.reciprocal(), Rational(0));
  return make_certificate(Polynomial::monomial(k), grid_points(GridKind::kOut, n), k - 1, pulled,
                          false);
}

ApproxCertificate shift_reduce(const Polynomial& target, const ApproxCertificate& cert_out) {
  if (cert_out.grid.kind != GridKind::kOut) {
    throw DomainError("shift_reduce needs a certificate over an OUT grid");
  }
  // p - p(. + 1/n) has degree deg(p) - 1, so the result stays within the
  // certificate's bound whenever deg(p) <= bound + 1.
  const int k = target.degree();
  const int d = cert_out.degree_bound;
  if (k > d + 1) {
    throw DomainError("shift_reduce: deg(target) = " + std::to_string(k) +
                      " exceeds certificate degree bound + 1 = " + std::to_string(d + 1));
  }
  if (cert_out.target != target) {
    throw DomainError("shift_reduce: certificate was issued for a different target");
  }
  const int n = cert_out.grid.n;
  const Rational h(1, n);
  Polynomial q = cert_out.approximant.compose_affine(Rational(1), h) + target -
                 target.compose_affine(Rational(1), h);
  if (q.degree() > d) throw InternalError("shift_reduce produced degree above the bound");
  return make_certificate(target, grid_points(GridKind::kIn, n), d, q, false);
}

Rational uniform_reference_error(int k) {
  if (k < 1) throw DomainError("uniform_reference_error needs k >= 1");
  return Rational(2).pow(1 - k);
}

Rational monomial_hardness_ref_sq(int n, int k) {
  if (k < 1 || k >= n) throw DomainError("monomial_hardness_ref_sq needs 1 <= k < n");
  return Rational(factorial(n + k), factorial(n - k) * int_pow(2L * n, 2 * k));
}

Rational monomial_truncation_ref_sq(int n, int k) {
  if (k < 1 || k > n) throw DomainError("monomial_truncation_ref_sq needs 1 <= k <= n");
  return Rational(factorial(n + k + 1), factorial(n - k + 1) * int_pow(2L * (n + 1), 2 * k));
}

}  // namespace kwise
