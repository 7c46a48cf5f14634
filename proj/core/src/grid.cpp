#include "kwise/grid.hpp"

#include <algorithm>

#include "kwise/error.hpp"

namespace kwise {

std::string_view to_string(GridKind kind) { return kind == GridKind::kIn ? "in" : "out"; }

GridKind parse_grid_kind(std::string_view text) {
  if (text == "in" || text == "IN") return GridKind::kIn;
  if (text == "out" || text == "OUT") return GridKind::kOut;
  throw DomainError("unknown grid kind '" + std::string(text) + "' (expected in|out)");
}

bool Grid::contains(const Rational& t) const {
  return std::binary_search(points.begin(), points.end(), t);
}

Grid grid_points(GridKind kind, int n) {
  if (n < 1) throw DomainError("grid size must be positive, got " + std::to_string(n));
  Grid g{kind, n, {}};
  if (kind == GridKind::kIn) {
    g.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g.points.emplace_back(Rational(2 * i + 1 - n, n));
  } else {
    g.points.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) g.points.emplace_back(Rational(2 * i - n, n));
  }
  return g;
}

std::vector<Rational> AffineMap::apply(const std::vector<Rational>& xs) const {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back((*this)(x));
  return out;
}

AffineMap stretch_map(int n) {
  if (n < 1) throw DomainError("stretch map needs n >= 1");
  return AffineMap{Rational(n + 1, n), Rational(0)};
}

Rational weight_to_point(int n, int m) {
  if (n < 1) throw DomainError("weight_to_point needs n >= 1");
  if (m < 0 || m > n) {
    throw DomainError("weight " + std::to_string(m) + " outside 0.." + std::to_string(n));
  }
  return Rational(n - 2 * m, n);
}

int point_to_weight(int n, const Rational& t) {
  if (n < 1) throw DomainError("point_to_weight needs n >= 1");
  Rational m = (Rational(1) - t) * Rational(n) / Rational(2);
  if (!m.is_integer() || m < Rational(0) || m > Rational(n)) {
    throw DomainError(t.str() + " is not a point of OUT_" + std::to_string(n));
  }
  return static_cast<int>(m.numerator().get_si());
}

Rational inner_product(const Polynomial& f, const Polynomial& g, int n) {
  Grid grid = grid_points(GridKind::kIn, n);
  Rational sum;
  for (const auto& x : grid.points) sum += f(x) * g(x);
  return sum / Rational(n);
}

}  // namespace kwise
