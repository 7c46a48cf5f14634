#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kwise/rational.hpp"

namespace kwise::lp {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

/// coeffs . x (sense) rhs
struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::kLessEqual;
  Rational rhs;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  std::vector<Rational> x;
  Rational objective;
  /// One multiplier per constraint, for the dual of
  ///   max c.x  s.t.  A x (sense) b,  x >= 0:
  /// y_i >= 0 on <= rows, y_i <= 0 on >= rows, free on = rows,
  /// A^T y >= c and b.y == objective at optimality.
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

/// Exact two-phase primal simplex over a dense rational tableau, all
/// variables nonnegative. Bland's rule (lowest-index entering column,
/// lowest-index leaving variable on ratio ties) rules out cycling.
///
/// Phase one runs once in the constructor; each maximize() call then runs
/// phase two from the current basis, so a sequence of objectives over the
/// same feasible region is warm-started.
class Simplex {
 public:
  Simplex(std::size_t num_vars, std::vector<Constraint> constraints);

  bool feasible() const { return feasible_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_constraints() const { return rows_; }

  /// Maximizes objective . x. objective.size() must equal num_vars().
  Solution maximize(std::span<const Rational> objective);

  std::size_t total_pivots() const { return total_pivots_; }

 private:
  Rational& at(std::size_t r, std::size_t c) { return tab_[r * stride_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return tab_[r * stride_ + c]; }

  void pivot(std::size_t row, std::size_t col, std::vector<Rational>& reduced);
  /// Runs Bland iterations against `cost` (one entry per tableau column).
  /// Returns false on unboundedness.
  bool optimize(const std::vector<Rational>& cost, std::size_t enter_limit, std::size_t& pivots);

  std::size_t num_vars_;
  std::size_t rows_;
  std::size_t num_slack_ = 0;
  std::size_t num_art_ = 0;
  std::size_t cols_ = 0;    // structural + slack + artificial
  std::size_t stride_ = 0;  // cols_ + 1 (rhs)
  std::vector<Rational> tab_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> identity_col_;  // initial basic column per row
  std::vector<int> row_sign_;              // -1 where a row was negated to make rhs >= 0
  bool feasible_ = false;
  std::size_t total_pivots_ = 0;
};

/// One-shot convenience wrapper.
Solution maximize(std::size_t num_vars, std::vector<Constraint> constraints,
                  std::span<const Rational> objective);

}  // namespace kwise::lp
