#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kwise/polynomial.hpp"
#include "kwise/rational.hpp"

namespace kwise {

/// IN is the n-point grid {-1+1/n, -1+3/n, ..., 1-1/n}; OUT is the
/// (n+1)-point grid {-1, -1+2/n, ..., 1}.
enum class GridKind { kIn, kOut };

std::string_view to_string(GridKind kind);
GridKind parse_grid_kind(std::string_view text);

/// Equispaced symmetric grid on [-1, 1], points increasing.
struct Grid {
  GridKind kind = GridKind::kIn;
  int n = 0;
  std::vector<Rational> points;

  std::size_t size() const { return points.size(); }
  bool contains(const Rational& t) const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

Grid grid_points(GridKind kind, int n);

/// x -> scale * x + offset.
struct AffineMap {
  Rational scale;
  Rational offset;

  Rational operator()(const Rational& x) const { return scale * x + offset; }
  std::vector<Rational> apply(const std::vector<Rational>& xs) const;
};

/// x -> ((n+1)/n) x, which carries IN_{n+1} onto OUT_n.
AffineMap stretch_map(int n);

/// Hamming weight m in 0..n to the OUT_n point 1 - 2m/n.
Rational weight_to_point(int n, int m);
/// Inverse of weight_to_point: (1 - t) n / 2. Rejects t off OUT_n.
int point_to_weight(int n, const Rational& t);

/// (f, g) = (1/n) sum over IN_n of f(x) g(x).
Rational inner_product(const Polynomial& f, const Polynomial& g, int n);

}  // namespace kwise
