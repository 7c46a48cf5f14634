#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kwise/distributions.hpp"
#include "kwise/rational.hpp"
#include "kwise/simplex.hpp"

namespace kwise {

/// A (k-1)-wise indistinguishable pair with a test on k bits and the
/// advantage that test achieves.
struct ExtremalPair {
  int n = 0;
  int k = 0;
  SymmetricDist mu;
  SymmetricDist nu;
  SymmetricTestSet test;
  Rational advantage;
  int indist_level = 0;
};

/// The feasible region of pairs (mu, nu) over {0,1}^n whose factorial
/// moments agree up to order `level`, as an exact LP. Phase one runs once;
/// every objective afterwards warm-starts from the previous optimum.
class IndistinguishablePairs {
 public:
  IndistinguishablePairs(int n, int level);

  int n() const { return n_; }
  int level() const { return level_; }

  struct Optimum {
    SymmetricDist mu;
    SymmetricDist nu;
    Rational value;
  };

  /// max sum_m (mu(m) - nu(m)) values[m] over the region; values has n+1
  /// entries indexed by weight.
  Optimum maximize(std::span<const Rational> values);

  std::size_t total_pivots() const { return lp_.total_pivots(); }

 private:
  int n_;
  int level_;
  lp::Simplex lp_;
};

/// B(n,k)^2 = (n-k)^(n-k) (n+k)^(n+k) / (4^k n^(2n)), with 0^0 = 1.
Rational bound_B_sq(int n, int k);

/// Acceptance probability of `test` on a uniform weight-m string, per m.
std::vector<Rational> test_acceptance_values(int n, const SymmetricTestSet& test);

/// Maximizes the advantage of Q_w over (k-1)-wise indistinguishable pairs.
/// Requires 1 <= k <= n, 0 <= w <= k.
ExtremalPair extremal_pair_for_test(int n, int k, int w);

/// Same for an arbitrary symmetric test on k bits.
ExtremalPair extremal_pair_for_set(int n, int k, const SymmetricTestSet& test);

struct DualityReport {
  int n = 0;
  int k = 0;
  int w = 0;
  Rational lp_advantage;
  /// Best degree-(k-1) uniform error of p_w over OUT_n.
  Rational approx_error;
  bool holds = false;
};

/// Computes both sides of lp_advantage == 2 * approx_error independently.
DualityReport duality_check(int n, int k, int w);

enum class TvMode { kEnumerate, kAlternate };

std::string_view to_string(TvMode mode);
TvMode parse_tv_mode(std::string_view text);

struct TvResult {
  ExtremalPair pair;
  Rational tv;
  TvMode mode;
  /// True for ENUMERATE (global optimum); ALTERNATE yields a lower bound.
  bool exact;
  std::size_t lp_solves;
};

inline constexpr int kMaxEnumerateK = 10;

/// Maximizes tv(marginal(mu,k), marginal(nu,k)) over (k-1)-wise
/// indistinguishable pairs. ENUMERATE solves one LP per accept set
/// (requires k <= kMaxEnumerateK); ALTERNATE iterates LP <-> best test to a
/// fixpoint from the best single-weight test.
TvResult extremal_tv(int n, int k, TvMode mode);

struct BoundReport {
  int n = 0;
  int k = 0;
  Rational bound_sq;
  /// Optimal advantage of Q_w for w = 0..k.
  std::vector<Rational> lp_by_w;
  /// k/2 for even k, otherwise the smallest maximizing w.
  int reference_w = 0;
  Rational lp_advantage;
  Rational max_lp_advantage;
  /// Best degree-(k-1) error of p_{reference_w} over OUT_n.
  Rational approx_error;
  Rational tv_star;
  bool tv_exact = false;
  /// lp_advantage^2 >= B^2; only defined for even k >= 2.
  std::optional<bool> lower_bound_holds;
  /// tv_star <= (k+1) * max_lp_advantage.
  bool decomposition_holds = false;
  /// tv_star^2 <= n^(2c) B^2 for the cap c.
  bool slack_holds = false;
  int slack_cap = 4;
  /// log(tv_star / B) / log(n); absent for n = 1 or tv_star = 0.
  std::optional<double> measured_c;
  /// lp_advantage == 2 * approx_error.
  bool duality_holds = false;
};

/// Assembles every quantity of the upper/lower bound comparison for one
/// (n, k) cell. ENUMERATE for k <= kMaxEnumerateK, ALTERNATE above. k = 0
/// yields the trivial report (nothing can be observed).
BoundReport verify_sandwich(int n, int k, int slack_cap = 4);

}  // namespace kwise
