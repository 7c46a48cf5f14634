#include "kwise/gram.hpp"

#include <string>

#include "kwise/error.hpp"
#include "kwise/grid.hpp"

namespace kwise {

namespace {

void check_basis_args(int n, int max_deg) {
  if (n < 1) throw DomainError("basis needs n >= 1, got " + std::to_string(n));
  if (max_deg < 0) throw DomainError("max_deg must be >= 0");
  if (max_deg >= n) {
    throw DomainError("max_deg must be < n (IN_" + std::to_string(n) + " has only " +
                      std::to_string(n) + " points)");
  }
}

}  // namespace

OrthoBasis build_basis_gs(int n, int max_deg) {
  check_basis_args(n, max_deg);
  const Grid grid = grid_points(GridKind::kIn, n);
  const Rational inv_n(1, n);

  OrthoBasis basis{n, max_deg, {}, {}};
  std::vector<std::vector<Rational>> values;  // psi_j on the grid

  std::vector<Rational> power(grid.size(), Rational(1));  // x^d on the grid
  for (int d = 0; d <= max_deg; ++d) {
    if (d > 0) {
      for (std::size_t i = 0; i < grid.size(); ++i) power[i] *= grid.points[i];
    }
    Polynomial p = Polynomial::monomial(d);
    std::vector<Rational> v = power;
    for (int j = 0; j < d; ++j) {
      const auto& vj = values[static_cast<std::size_t>(j)];
      Rational dot;
      for (std::size_t i = 0; i < grid.size(); ++i) dot += power[i] * vj[i];
      if (dot.is_zero()) continue;
      Rational proj = dot * inv_n / basis.norm_sq[static_cast<std::size_t>(j)];
      p -= basis.psi[static_cast<std::size_t>(j)] * proj;
      for (std::size_t i = 0; i < grid.size(); ++i) v[i] -= proj * vj[i];
    }
    Rational norm;
    for (const auto& x : v) norm += x * x;
    norm *= inv_n;
    if (norm.is_zero()) throw InternalError("Gram-Schmidt produced a null vector at degree " +
                                            std::to_string(d));
    basis.psi.push_back(std::move(p));
    basis.norm_sq.push_back(std::move(norm));
    values.push_back(std::move(v));
  }
  return basis;
}

Rational alpha_sq(int n, int d) {
  if (d < 1 || d >= n) {
    throw DomainError("alpha_sq needs 1 <= d <= n-1 (n=" + std::to_string(n) +
                      ", d=" + std::to_string(d) + ")");
  }
  // n^2 (d^2 - 1/4) / (d^2 (n^2 - d^2)) = n^2 (4d^2 - 1) / (4 d^2 (n^2 - d^2))
  const long nn = static_cast<long>(n) * n;
  const long dd = static_cast<long>(d) * d;
  return Rational(mpz_class(nn) * (4 * dd - 1), mpz_class(4 * dd) * (nn - dd));
}

OrthoBasis build_basis_recurrence(int n, int max_deg) {
  check_basis_args(n, max_deg);
  OrthoBasis basis{n, max_deg, {}, {}};
  basis.psi.push_back(Polynomial::constant(Rational(1)));
  basis.norm_sq.emplace_back(1);
  for (int d = 1; d <= max_deg; ++d) {
    Polynomial next = basis.psi.back().shifted_up();
    if (d >= 2) {
      Rational b = (Rational(4) * alpha_sq(n, d - 1)).reciprocal();
      next -= basis.psi[static_cast<std::size_t>(d - 2)] * b;
    }
    Rational norm = basis.norm_sq.back() / (Rational(4) * alpha_sq(n, d));
    basis.psi.push_back(std::move(next));
    basis.norm_sq.push_back(std::move(norm));
  }
  return basis;
}

Polynomial GramExpansion::reconstruct(const OrthoBasis& basis) const {
  Polynomial p;
  for (std::size_t d = 0; d < psi_coeffs.size(); ++d) {
    if (!psi_coeffs[d].is_zero()) p += basis.psi.at(d) * psi_coeffs[d];
  }
  return p;
}

GramExpansion gram_expand(const Polynomial& p, const OrthoBasis& basis) {
  if (p.degree() > basis.max_deg) {
    throw DomainError("degree " + std::to_string(p.degree()) + " exceeds basis max_deg " +
                      std::to_string(basis.max_deg));
  }
  const int top = p.degree();
  GramExpansion e{basis.n, {}, {}};
  e.psi_coeffs.resize(static_cast<std::size_t>(top + 1));
  Polynomial rest = p;
  for (int d = top; d >= 0; --d) {
    Rational c = rest.coeff(d);
    if (!c.is_zero()) rest -= basis.psi[static_cast<std::size_t>(d)] * c;
    e.psi_coeffs[static_cast<std::size_t>(d)] = std::move(c);
  }
  if (!rest.is_zero()) throw InternalError("gram_expand left a nonzero remainder");
  e.normalized_coeff_sq.reserve(e.psi_coeffs.size());
  for (std::size_t d = 0; d < e.psi_coeffs.size(); ++d) {
    e.normalized_coeff_sq.push_back(e.psi_coeffs[d] * e.psi_coeffs[d] * basis.norm_sq[d]);
  }
  return e;
}

Rational monomial_leading_coeff_sq(int n, int k) {
  if (k < 1 || k >= n) {
    throw DomainError("monomial_leading_coeff_sq needs 1 <= k <= n-1");
  }
  return build_basis_recurrence(n, k).norm_sq.back();
}

Rational leading_coeff_sq_product(int n, int k) {
  if (k < 1 || k >= n) throw DomainError("leading_coeff_sq_product needs 1 <= k <= n-1");
  Rational prod(1);
  for (int d = 1; d <= k; ++d) prod /= Rational(4) * alpha_sq(n, d);
  return prod;
}

L2Approx l2_best_approx(const Polynomial& p, const OrthoBasis& basis, int deg) {
  if (deg < 0) throw DomainError("l2_best_approx needs deg >= 0");
  if (p.degree() <= deg) return {p, Rational(0)};
  GramExpansion e = gram_expand(p, basis);
  L2Approx out;
  for (int d = 0; d <= deg; ++d) {
    const auto& c = e.psi_coeffs[static_cast<std::size_t>(d)];
    if (!c.is_zero()) out.approximant += basis.psi[static_cast<std::size_t>(d)] * c;
  }
  for (std::size_t d = static_cast<std::size_t>(deg) + 1; d < e.normalized_coeff_sq.size(); ++d) {
    out.error_sq += e.normalized_coeff_sq[d];
  }
  return out;
}

}  // namespace kwise
