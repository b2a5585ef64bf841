#include "niche/dpo.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "niche/errors.hpp"

namespace niche {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  const auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) throw DuplicatePoint("duplicate point " + dup->to_string());
}

const Point& PointSet::at(VertexId v) const {
  if (v >= points_.size()) throw UnknownVertex("unknown vertex " + std::to_string(v));
  return points_[v];
}

std::optional<VertexId> PointSet::index_of(const Point& p) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<VertexId>(it - points_.begin());
}

Dpo::Dpo(PointSet vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  prey_.resize(n);
  predators_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId x = 0; x < n; ++x) {
      if (strictly_below(vertices_[x], vertices_[v])) prey_[v].push_back(x);
      if (strictly_below(vertices_[v], vertices_[x])) predators_[v].push_back(x);
    }
  }
  if (n == 0) return;
  prefix_min_x2_.resize(n + 1);
  suffix_max_x2_.resize(n + 1);
  // Sentinels never compare: lookups only read prefix_min_x2_[i] for i >= 1
  // and suffix_max_x2_[i] for i < n.
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& y = vertices_[i].x2;
    prefix_min_x2_[i + 1] = (i == 0 || y < prefix_min_x2_[i]) ? y : prefix_min_x2_[i];
  }
  for (std::size_t i = n; i-- > 0;) {
    const Rational& y = vertices_[i].x2;
    suffix_max_x2_[i] = (i == n - 1 || y > suffix_max_x2_[i + 1]) ? y : suffix_max_x2_[i + 1];
  }
}

void Dpo::check(VertexId v) const {
  if (v >= vertices_.size()) throw UnknownVertex("unknown vertex " + std::to_string(v));
}

void Dpo::check_pair(VertexId u, VertexId v) const {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("common prey/predator query needs two distinct vertices");
}

bool Dpo::has_arc(VertexId from, VertexId to) const {
  check(from);
  check(to);
  return strictly_below(vertices_[to], vertices_[from]);
}

const std::vector<VertexId>& Dpo::prey_of(VertexId v) const {
  check(v);
  return prey_[v];
}

const std::vector<VertexId>& Dpo::predators_of(VertexId v) const {
  check(v);
  return predators_[v];
}

bool Dpo::any_strictly_below(const Point& c) const {
  const auto pts = vertices_.points();
  // Vertices with x1 < c.x1 form a prefix of the canonical order.
  const auto it = std::lower_bound(pts.begin(), pts.end(), c.x1,
                                   [](const Point& p, const Rational& x) { return p.x1 < x; });
  const auto count = static_cast<std::size_t>(it - pts.begin());
  return count > 0 && prefix_min_x2_[count] < c.x2;
}

bool Dpo::any_strictly_above(const Point& c) const {
  const auto pts = vertices_.points();
  // Vertices with x1 > c.x1 form a suffix.
  const auto it = std::upper_bound(pts.begin(), pts.end(), c.x1,
                                   [](const Rational& x, const Point& p) { return x < p.x1; });
  const auto first = static_cast<std::size_t>(it - pts.begin());
  return first < pts.size() && suffix_max_x2_[first] > c.x2;
}

bool Dpo::has_common_prey(VertexId u, VertexId v) const {
  check_pair(u, v);
  return any_strictly_below(min_corner(vertices_[u], vertices_[v]));
}

bool Dpo::has_common_predator(VertexId u, VertexId v) const {
  check_pair(u, v);
  return any_strictly_above(max_corner(vertices_[u], vertices_[v]));
}

std::optional<VertexId> Dpo::common_prey_witness(VertexId u, VertexId v) const {
  check_pair(u, v);
  const Point corner = min_corner(vertices_[u], vertices_[v]);
  for (VertexId z = 0; z < vertices_.size(); ++z) {
    if (strictly_below(vertices_[z], corner)) return z;
  }
  return std::nullopt;
}

std::optional<VertexId> Dpo::common_predator_witness(VertexId u, VertexId v) const {
  check_pair(u, v);
  const Point corner = max_corner(vertices_[u], vertices_[v]);
  for (VertexId z = 0; z < vertices_.size(); ++z) {
    if (strictly_below(corner, vertices_[z])) return z;
  }
  return std::nullopt;
}

Dpo build_dpo(std::span<const Point> points) {
  return Dpo(PointSet(std::vector<Point>(points.begin(), points.end())));
}

}  // namespace niche
