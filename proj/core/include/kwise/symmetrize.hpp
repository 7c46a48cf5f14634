#pragma once

#include <vector>

#include "kwise/polynomial.hpp"
#include "kwise/rational.hpp"

namespace kwise {

/// Pr[a uniform weight-m string of length n has exactly w ones among k fixed
/// coordinates] = C(k,w) C(n-k, m-w) / C(n,m). Requires 0 <= w <= k <= n and
/// 0 <= m <= n.
Rational hypergeometric_pmf(int n, int k, int m, int w);

/// The symmetrized acceptance probability of Q_w (accept iff the k observed
/// bits have weight exactly w), as a polynomial in t = 1 - 2m/n.
struct SymmetrizedTest {
  int n = 0;
  int k = 0;
  int w = 0;
  Polynomial poly;
  /// Z_- then Z_+, each in the order h = 0, 1, ...
  std::vector<Rational> zeros;
  /// |leading coefficient of poly|.
  Rational leading_abs;
  /// Observed sign of the leading coefficient. Recorded, not asserted.
  int leading_sign = 0;
};

/// Z_- = {-1 + 2h/n : h < k-w} and Z_+ = {1 - 2h/n : h < w}.
std::vector<Rational> predicted_zeros(int n, int k, int w);

/// Interpolates the n+1 hypergeometric values over OUT_n. Throws
/// InternalError if the interpolant has degree above k or misses a
/// predicted zero.
SymmetrizedTest build_pw(int n, int k, int w);

/// Closed form for |C_w|:
///   C(k,w) C(n-k,(n-k)/2) / C(n,(n-k+2w)/2)
///     * n^k ((n-k)!!)^2 / ((n-k+2w)!! (n-2w+k)!!).
/// Throws ParityError unless n-k is even.
Rational cw_closed_form(int n, int k, int w);

/// |C_{k/2}| = C(k,k/2) C(n-k,(n-k)/2) / C(n,n/2) * n^k ((n-k)!!)^2 / (n!!)^2.
/// Throws ParityError unless n and k are even.
Rational cw_central_closed_form(int n, int k);

struct CwArgmax {
  /// Smallest maximizing w.
  int w = 0;
  /// Its mirror k - w (equal to w at the center).
  int mirror = 0;
  Rational leading_abs;
  Rational central_closed_form;
  /// |C_w| for w = 0..k.
  std::vector<Rational> magnitudes;
};

/// Exhaustive argmax of |C_w| over w = 0..k. Requires n, k even, k <= n.
/// A tie between two maximizers that are not mirror images w, k-w is an
/// InternalError.
CwArgmax cw_argmax(int n, int k);

/// prod_{i=1}^k (1 - 1/(4 i^2)).
Rational wallis_product(int k);

}  // namespace kwise
