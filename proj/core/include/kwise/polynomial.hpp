#pragma once

#include <span>
#include <string>
#include <vector>

#include "kwise/rational.hpp"

namespace kwise {

/// Dense univariate polynomial over the rationals. coefficients()[d] is the
/// coefficient of x^d; the top stored coefficient is nonzero, so the zero
/// polynomial stores nothing and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// c * x^degree.
  static Polynomial monomial(int degree, const Rational& c = Rational(1));
  /// lead * prod (x - r).
  static Polynomial from_roots(std::span<const Rational> roots, const Rational& lead = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == Rational(1); }

  /// Coefficient of x^d; zero outside the stored range.
  Rational coeff(int d) const;
  /// Top coefficient; zero for the zero polynomial.
  Rational leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  /// q(x) = p(a x + b).
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  /// Terms of degree <= max_degree.
  Polynomial truncate(int max_degree) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Multiplication by x.
  Polynomial shifted_up() const;

  /// Human-readable form, highest degree first: "x^2 - 5/16".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]); xs distinct.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// poly_affine_compose(p, a, b)(x) = p(a x + b).
inline Polynomial poly_affine_compose(const Polynomial& p, const Rational& a, const Rational& b) {
  return p.compose_affine(a, b);
}

}  // namespace kwise
