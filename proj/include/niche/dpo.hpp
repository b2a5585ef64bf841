#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "niche/geom.hpp"

namespace niche {

using VertexId = std::size_t;

/// Distinct points in canonical (lexicographic) order. A point's position
/// in that order is its vertex id.
class PointSet {
 public:
  PointSet() = default;
  /// Sorts the input; throws DuplicatePoint if two points coincide.
  explicit PointSet(std::vector<Point> points);

  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  [[nodiscard]] const Point& operator[](VertexId v) const { return points_[v]; }
  [[nodiscard]] const Point& at(VertexId v) const;
  [[nodiscard]] std::span<const Point> points() const { return points_; }
  [[nodiscard]] std::optional<VertexId> index_of(const Point& p) const;
  [[nodiscard]] bool contains(const Point& p) const { return index_of(p).has_value(); }

  [[nodiscard]] auto begin() const { return points_.begin(); }
  [[nodiscard]] auto end() const { return points_.end(); }

 private:
  std::vector<Point> points_;
};

/// Doubly partial order: the digraph on a point set with an arc (v, x)
/// exactly when x ≺ v. Arcs are implicit; prey and predator lists are
/// cached per vertex, and prefix-minimum / suffix-maximum staircases over
/// the canonical order answer "is any point strictly below/above c" in
/// O(log n).
class Dpo {
 public:
  Dpo() = default;
  explicit Dpo(PointSet vertices);

  [[nodiscard]] std::size_t size() const { return vertices_.size(); }
  [[nodiscard]] const PointSet& vertices() const { return vertices_; }
  [[nodiscard]] const Point& point(VertexId v) const { return vertices_.at(v); }

  [[nodiscard]] bool has_arc(VertexId from, VertexId to) const;

  /// Vertices strictly below v, ascending.
  [[nodiscard]] const std::vector<VertexId>& prey_of(VertexId v) const;
  /// Vertices strictly above v, ascending.
  [[nodiscard]] const std::vector<VertexId>& predators_of(VertexId v) const;

  [[nodiscard]] bool has_common_prey(VertexId u, VertexId v) const;
  [[nodiscard]] bool has_common_predator(VertexId u, VertexId v) const;

  /// Some vertex z with z ≺ c.
  [[nodiscard]] bool any_strictly_below(const Point& c) const;
  /// Some vertex z with c ≺ z.
  [[nodiscard]] bool any_strictly_above(const Point& c) const;

  /// Smallest-id vertex strictly below min_corner(u, v), by linear scan.
  [[nodiscard]] std::optional<VertexId> common_prey_witness(VertexId u, VertexId v) const;
  /// Smallest-id vertex strictly above max_corner(u, v), by linear scan.
  [[nodiscard]] std::optional<VertexId> common_predator_witness(VertexId u, VertexId v) const;

 private:
  void check(VertexId v) const;
  void check_pair(VertexId u, VertexId v) const;

  PointSet vertices_;
  std::vector<std::vector<VertexId>> prey_;
  std::vector<std::vector<VertexId>> predators_;
  std::vector<Rational> prefix_min_x2_;  // [i] = min x2 over vertices [0, i); size n + 1
  std::vector<Rational> suffix_max_x2_;  // [i] = max x2 over vertices [i, n); size n + 1
};

/// Throws DuplicatePoint when the input repeats a point.
[[nodiscard]] Dpo build_dpo(std::span<const Point> points);

}  // namespace niche
