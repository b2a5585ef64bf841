#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "niche/rational.hpp"

namespace niche {

/// A point of the rational plane. Ordering is lexicographic by (x1, x2),
/// which is the canonical vertex order everywhere in the library.
struct Point {
  Rational x1;
  Rational x2;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;

  Point operator-() const { return {-x1, -x2}; }
  friend Point operator+(const Point& a, const Point& b) { return {a.x1 + b.x1, a.x2 + b.x2}; }

  /// "(x1,x2)" using canonical rational text.
  [[nodiscard]] std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// x ≺ y: strictly smaller in both coordinates.
[[nodiscard]] inline bool strictly_below(const Point& x, const Point& y) { return x.x1 < y.x1 && x.x2 < y.x2; }

/// x ↘ y: y is weakly to the right of and weakly below x.
[[nodiscard]] inline bool staircase(const Point& x, const Point& y) { return x.x1 <= y.x1 && y.x2 <= x.x2; }

/// x ⪯ y: weakly smaller in both coordinates.
[[nodiscard]] inline bool weakly_below(const Point& x, const Point& y) { return x.x1 <= y.x1 && x.x2 <= y.x2; }

[[nodiscard]] inline Point min_corner(const Point& x, const Point& y) {
  return {x.x1 < y.x1 ? x.x1 : y.x1, x.x2 < y.x2 ? x.x2 : y.x2};
}

[[nodiscard]] inline Point max_corner(const Point& x, const Point& y) {
  return {x.x1 < y.x1 ? y.x1 : x.x1, x.x2 < y.x2 ? y.x2 : x.x2};
}

/// Both coordinates are integers.
[[nodiscard]] inline bool is_lattice(const Point& p) { return p.x1.is_integer() && p.x2.is_integer(); }

[[nodiscard]] inline Rational diagonal_sum(const Point& p) { return p.x1 + p.x2; }

/// The anti-diagonal {v : v1 + v2 = c}.
struct DiagonalLine {
  Rational c;

  [[nodiscard]] bool contains(const Point& p) const { return diagonal_sum(p) == c; }
};

}  // namespace niche
