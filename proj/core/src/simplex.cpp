#include "kwise/simplex.hpp"

#include <string>
#include <utility>

#include "kwise/error.hpp"

namespace kwise::lp {

namespace {

constexpr std::size_t kPivotLimit = 2'000'000;

}  // namespace

Simplex::Simplex(std::size_t num_vars, std::vector<Constraint> constraints)
    : num_vars_(num_vars), rows_(constraints.size()) {
  row_sign_.assign(rows_, 1);
  std::vector<Sense> senses(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto& c = constraints[i];
    if (c.coeffs.size() != num_vars_) {
      throw DomainError("constraint " + std::to_string(i) + " has " +
                        std::to_string(c.coeffs.size()) + " coefficients, expected " +
                        std::to_string(num_vars_));
    }
    senses[i] = c.sense;
    if (c.rhs.sign() < 0) {
      row_sign_[i] = -1;
      if (c.sense == Sense::kLessEqual) senses[i] = Sense::kGreaterEqual;
      else if (c.sense == Sense::kGreaterEqual) senses[i] = Sense::kLessEqual;
    }
    if (senses[i] != Sense::kEqual) ++num_slack_;
    if (senses[i] != Sense::kLessEqual) ++num_art_;
  }
  cols_ = num_vars_ + num_slack_ + num_art_;
  stride_ = cols_ + 1;
  tab_.assign(rows_ * stride_, Rational());
  basic_.assign(rows_, 0);
  identity_col_.assign(rows_, 0);

  std::size_t next_slack = num_vars_;
  std::size_t next_art = num_vars_ + num_slack_;
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto& c = constraints[i];
    const bool neg = row_sign_[i] < 0;
    for (std::size_t j = 0; j < num_vars_; ++j) {
      if (!c.coeffs[j].is_zero()) at(i, j) = neg ? -c.coeffs[j] : c.coeffs[j];
    }
    at(i, cols_) = neg ? -c.rhs : c.rhs;
    switch (senses[i]) {
      case Sense::kLessEqual:
        at(i, next_slack) = Rational(1);
        identity_col_[i] = next_slack++;
        break;
      case Sense::kGreaterEqual:
        at(i, next_slack++) = Rational(-1);
        at(i, next_art) = Rational(1);
        identity_col_[i] = next_art++;
        break;
      case Sense::kEqual:
        at(i, next_art) = Rational(1);
        identity_col_[i] = next_art++;
        break;
    }
    basic_[i] = identity_col_[i];
  }

  // Phase one: maximize -(sum of artificials).
  const std::size_t art_begin = num_vars_ + num_slack_;
  std::vector<Rational> cost(cols_);
  for (std::size_t j = art_begin; j < cols_; ++j) cost[j] = Rational(-1);
  std::size_t pivots = 0;
  if (!optimize(cost, art_begin, pivots)) {
    throw InternalError("phase one reported unbounded; the auxiliary problem is bounded");
  }
  total_pivots_ += pivots;

  Rational infeasibility;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basic_[i] >= art_begin) infeasibility += at(i, cols_);
  }
  feasible_ = infeasibility.is_zero();
  if (!feasible_) return;

  // Drive zero-level artificials out of the basis. A row with no nonzero
  // non-artificial entry is redundant and stays inert.
  std::vector<Rational> scratch(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basic_[i] < art_begin) continue;
    for (std::size_t j = 0; j < art_begin; ++j) {
      if (!at(i, j).is_zero()) {
        pivot(i, j, scratch);
        ++total_pivots_;
        break;
      }
    }
  }
}

void Simplex::pivot(std::size_t row, std::size_t col, std::vector<Rational>& reduced) {
  const Rational piv = at(row, col);
  if (piv.is_zero()) throw InternalError("simplex pivot on a zero element");
  std::vector<std::size_t> nz;
  nz.reserve(stride_);
  for (std::size_t j = 0; j < stride_; ++j) {
    Rational& v = at(row, j);
    if (v.is_zero()) continue;
    if (piv != Rational(1)) v /= piv;
    nz.push_back(j);
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == row) continue;
    const Rational f = at(i, col);
    if (f.is_zero()) continue;
    for (std::size_t j : nz) at(i, j) -= f * at(row, j);
  }
  if (!reduced.empty()) {
    const Rational f = reduced[col];
    if (!f.is_zero()) {
      for (std::size_t j : nz) {
        if (j < cols_) reduced[j] -= f * at(row, j);
      }
    }
  }
  basic_[row] = col;
}

bool Simplex::optimize(const std::vector<Rational>& cost, std::size_t enter_limit,
                       std::size_t& pivots) {
  // reduced[j] = cost[j] - sum_i cost[basic_i] * T[i][j]
  std::vector<Rational> reduced = cost;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Rational& cb = cost[basic_[i]];
    if (cb.is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = at(i, j);
      if (!a.is_zero()) reduced[j] -= cb * a;
    }
  }

  for (;;) {
    std::size_t enter = enter_limit;
    for (std::size_t j = 0; j < enter_limit; ++j) {
      if (reduced[j].sign() > 0) {
        enter = j;
        break;
      }
    }
    if (enter == enter_limit) return true;

    std::size_t leave = rows_;
    Rational best;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = at(i, enter);
      if (a.sign() <= 0) continue;
      Rational ratio = at(i, cols_) / a;
      if (leave == rows_ || ratio < best || (ratio == best && basic_[i] < basic_[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave == rows_) return false;
    pivot(leave, enter, reduced);
    if (++pivots > kPivotLimit) throw InternalError("simplex exceeded the pivot limit");
  }
}

Solution Simplex::maximize(std::span<const Rational> objective) {
  if (objective.size() != num_vars_) {
    throw DomainError("objective has " + std::to_string(objective.size()) +
                      " entries, expected " + std::to_string(num_vars_));
  }
  Solution sol;
  if (!feasible_) {
    sol.status = Status::kInfeasible;
    return sol;
  }
  std::vector<Rational> cost(cols_);
  for (std::size_t j = 0; j < num_vars_; ++j) cost[j] = objective[j];
  const std::size_t art_begin = num_vars_ + num_slack_;
  std::size_t pivots = 0;
  bool bounded = optimize(cost, art_begin, pivots);
  total_pivots_ += pivots;
  sol.pivots = pivots;
  if (!bounded) {
    sol.status = Status::kUnbounded;
    return sol;
  }

  sol.status = Status::kOptimal;
  sol.x.assign(num_vars_, Rational());
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basic_[i] < num_vars_) sol.x[basic_[i]] = at(i, cols_);
  }
  for (std::size_t j = 0; j < num_vars_; ++j) {
    if (!sol.x[j].is_zero()) sol.objective += objective[j] * sol.x[j];
  }
  // y = c_B B^{-1}; B^{-1} sits in the columns that formed the initial basis.
  sol.duals.assign(rows_, Rational());
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational y;
    const std::size_t col = identity_col_[r];
    for (std::size_t l = 0; l < rows_; ++l) {
      const Rational& cb = cost[basic_[l]];
      if (cb.is_zero()) continue;
      const Rational& a = at(l, col);
      if (!a.is_zero()) y += cb * a;
    }
    sol.duals[r] = row_sign_[r] < 0 ? -y : y;
  }
  return sol;
}

Solution maximize(std::size_t num_vars, std::vector<Constraint> constraints,
                  std::span<const Rational> objective) {
  Simplex s(num_vars, std::move(constraints));
  return s.maximize(objective);
}

}  // namespace kwise::lp
