#include "kwise/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

#include "kwise/error.hpp"

namespace kwise {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) throw DomainError("malformed rational: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// floor(log10(x)) for x > 0, exact.
long floor_log10(const mpq_class& x) {
  const double d = x.get_d();
  long e = 0;
  if (std::isfinite(d) && d > 0.0) {
    e = static_cast<long>(std::floor(std::log10(d)));
  } else {
    // Out of double range: estimate from bit lengths.
    long bits = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
    e = static_cast<long>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
  }
  auto scaled = [&](long k) {
    mpq_class p = k >= 0 ? mpq_class(pow10(static_cast<unsigned long>(k)))
                         : mpq_class(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
    return p;
  };
  while (cmp(scaled(e), x) > 0) --e;
  while (cmp(scaled(e + 1), x) <= 0) ++e;
  return e;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (sgn(q_.get_den()) == 0) throw DivisionByZero();
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational Rational::pow(int e) const {
  if (e < 0) return reciprocal().pow(-e);
  Rational r;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.q_ = mpq_class(num, den);  // already canonical
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal(int significant) const {
  if (significant < 1) significant = 1;
  if (is_zero()) return "0";
  const mpq_class x = ::abs(q_);
  long exponent = floor_log10(x);
  // digits = round_half_even(x * 10^(significant - 1 - exponent))
  auto round_scaled = [&](long exp10) {
    long shift = significant - 1 - exp10;
    mpq_class s = x;
    if (shift >= 0) s *= mpq_class(pow10(static_cast<unsigned long>(shift)));
    else s /= mpq_class(pow10(static_cast<unsigned long>(-shift)));
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    mpq_class frac = s - mpq_class(whole);
    int c = cmp(frac, mpq_class(1, 2));
    if (c > 0 || (c == 0 && mpz_odd_p(whole.get_mpz_t()))) whole += 1;
    return whole;
  };
  mpz_class digits = round_scaled(exponent);
  if (digits == pow10(static_cast<unsigned long>(significant))) {
    ++exponent;
    digits = round_scaled(exponent);
  }
  std::string d = digits.get_str();
  // Strip trailing zeros of the mantissa.
  while (d.size() > 1 && d.back() == '0') d.pop_back();

  std::string out = sign() < 0 ? "-" : "";
  if (exponent < -4 || exponent >= significant) {
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += exponent < 0 ? "e-" : "e+";
    std::string e = std::to_string(exponent < 0 ? -exponent : exponent);
    if (e.size() < 2) e = "0" + e;
    out += e;
  } else if (exponent < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + d;
  } else {
    auto int_len = static_cast<std::size_t>(exponent + 1);
    if (d.size() <= int_len) {
      out += d + std::string(int_len - d.size(), '0');
    } else {
      out += d.substr(0, int_len) + "." + d.substr(int_len);
    }
  }
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.q_ = -a.q_;
  return r;
}
Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  r.q_ = a.q_ + b.q_;
  return r;
}
Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  r.q_ = a.q_ - b.q_;
  return r;
}
Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  r.q_ = a.q_ * b.q_;
  return r;
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero();
  Rational r;
  r.q_ = a.q_ / b.q_;
  return r;
}

std::size_t hash_value(const Rational& r) {
  std::size_t h = mpz_fdiv_ui(r.raw().get_num_mpz_t(), 1000000007UL);
  h = h * 31 + mpz_fdiv_ui(r.raw().get_den_mpz_t(), 1000000007UL);
  return h;
}

}  // namespace kwise
