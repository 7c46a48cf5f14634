#include "kwise/polynomial.hpp"

#include <utility>

#include "kwise/error.hpp"

namespace kwise {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  if (degree < 0) throw DomainError("monomial of negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots, const Rational& lead) {
  Polynomial p = constant(lead);
  for (const auto& r : roots) {
    p = p.shifted_up() - p * r;
  }
  return p;
}

Rational Polynomial::coeff(int d) const {
  if (d < 0 || d > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(d)];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring: acc = acc * (a x + b) + c_d.
  Polynomial acc;
  const Polynomial inner({b, a});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::truncate(int max_degree) const {
  if (max_degree < 0) return {};
  if (max_degree >= degree()) return *this;
  return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted_up() const {
  if (is_zero()) return {};
  std::vector<Rational> v;
  v.reserve(coeffs_.size() + 1);
  v.emplace_back();
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag == Rational(1);
    if (d == 0 || !unit) out += mag.str();
    if (d > 0) {
      if (!unit) out += "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolate: point and value counts differ");
  const std::size_t n = xs.size();
  // Newton divided differences, in place.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      Rational gap = xs[i] - xs[i - j];
      if (gap.is_zero()) throw DomainError("interpolate: repeated abscissa " + xs[i].str());
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  // Expand the Newton form from the innermost term outwards.
  Polynomial p;
  for (std::size_t i = n; i-- > 0;) {
    p = p.shifted_up() - p * xs[i];
    p += Polynomial::constant(dd[i]);
  }
  return p;
}

}  // namespace kwise
