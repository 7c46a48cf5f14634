#include "kwise/symmetrize.hpp"

#include <string>

#include "kwise/combinatorics.hpp"
#include "kwise/error.hpp"
#include "kwise/grid.hpp"

namespace kwise {

namespace {

void check_nkw(int n, int k, int w, const char* what) {
  if (n < 1 || k < 0 || k > n || w < 0 || w > k) {
    throw DomainError(std::string(what) + " needs 0 <= w <= k <= n, n >= 1 (n=" +
                      std::to_string(n) + ", k=" + std::to_string(k) +
                      ", w=" + std::to_string(w) + ")");
  }
}

}  // namespace

Rational hypergeometric_pmf(int n, int k, int m, int w) {
  check_nkw(n, k, w, "hypergeometric_pmf");
  if (m < 0 || m > n) throw DomainError("hypergeometric_pmf needs 0 <= m <= n");
  return Rational(binomial(k, w) * binomial(n - k, m - w), binomial(n, m));
}

std::vector<Rational> predicted_zeros(int n, int k, int w) {
  check_nkw(n, k, w, "predicted_zeros");
  std::vector<Rational> z;
  z.reserve(static_cast<std::size_t>(k));
  for (int h = 0; h < k - w; ++h) z.emplace_back(Rational(2 * h - n, n));
  for (int h = 0; h < w; ++h) z.emplace_back(Rational(n - 2 * h, n));
  return z;
}

SymmetrizedTest build_pw(int n, int k, int w) {
  check_nkw(n, k, w, "build_pw");
  std::vector<Rational> ts;
  std::vector<Rational> vals;
  ts.reserve(static_cast<std::size_t>(n) + 1);
  vals.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    ts.push_back(weight_to_point(n, m));
    vals.push_back(hypergeometric_pmf(n, k, m, w));
  }
  SymmetrizedTest out{n, k, w, interpolate(ts, vals), predicted_zeros(n, k, w), {}, 0};
  if (out.poly.degree() > k) {
    throw InternalError("p_w interpolant has degree " + std::to_string(out.poly.degree()) +
                        " > k = " + std::to_string(k));
  }
  for (const auto& z : out.zeros) {
    if (!out.poly(z).is_zero()) {
      throw InternalError("p_w does not vanish at predicted zero " + z.str());
    }
  }
  out.leading_abs = out.poly.leading().abs();
  out.leading_sign = out.poly.leading().sign();
  return out;
}

Rational cw_closed_form(int n, int k, int w) {
  check_nkw(n, k, w, "cw_closed_form");
  if ((n - k) % 2 != 0) {
    throw ParityError("cw_closed_form needs n - k even (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  const int half = (n - k) / 2;
  const mpz_class dfk = double_factorial(n - k);
  mpz_class num = binomial(k, w) * binomial(n - k, half) * int_pow(n, k) * dfk * dfk;
  mpz_class den =
      binomial(n, half + w) * double_factorial(n - k + 2 * w) * double_factorial(n - 2 * w + k);
  return Rational(num, den);
}

Rational cw_central_closed_form(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw DomainError("cw_central_closed_form needs 0 <= k <= n");
  if (n % 2 != 0 || k % 2 != 0) {
    throw ParityError("cw_central_closed_form needs n and k even (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  const mpz_class dfk = double_factorial(n - k);
  const mpz_class dfn = double_factorial(n);
  mpz_class num = binomial(k, k / 2) * binomial(n - k, (n - k) / 2) * int_pow(n, k) * dfk * dfk;
  mpz_class den = binomial(n, n / 2) * dfn * dfn;
  return Rational(num, den);
}

CwArgmax cw_argmax(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw DomainError("cw_argmax needs 0 <= k <= n");
  if (n % 2 != 0 || k % 2 != 0) {
    throw ParityError("cw_argmax needs n and k even (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  CwArgmax out;
  out.magnitudes.reserve(static_cast<std::size_t>(k) + 1);
  for (int w = 0; w <= k; ++w) out.magnitudes.push_back(build_pw(n, k, w).leading_abs);

  std::vector<int> best{0};
  for (int w = 1; w <= k; ++w) {
    const auto& m = out.magnitudes[static_cast<std::size_t>(w)];
    const auto& cur = out.magnitudes[static_cast<std::size_t>(best.front())];
    if (m > cur) best = {w};
    else if (m == cur) best.push_back(w);
  }
  if (best.size() > 2 || (best.size() == 2 && best[0] + best[1] != k)) {
    std::string list;
    for (int w : best) list += (list.empty() ? "" : ",") + std::to_string(w);
    throw InternalError("|C_w| has non-mirror maximizers {" + list + "}");
  }
  out.w = best.front();
  out.mirror = k - out.w;
  out.leading_abs = out.magnitudes[static_cast<std::size_t>(out.w)];
  out.central_closed_form = cw_central_closed_form(n, k);
  return out;
}

Rational wallis_product(int k) {
  if (k < 1) throw DomainError("wallis_product needs k >= 1");
  mpz_class num = 1;
  mpz_class den = 1;
  for (long i = 1; i <= k; ++i) {
    num *= 4 * i * i - 1;
    den *= 4 * i * i;
  }
  return Rational(num, den);
}

}  // namespace kwise
