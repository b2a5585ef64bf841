#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "niche/dpo.hpp"
#include "niche/geom.hpp"

namespace niche {

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists,
/// a dense adjacency matrix and optional point labels.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n);
  /// Labels must have one point per vertex.
  explicit UndirectedGraph(std::vector<Point> labels);

  [[nodiscard]] std::size_t size() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }

  /// Adds uv; loops throw std::invalid_argument, repeats are ignored.
  void add_edge(VertexId u, VertexId v);

  [[nodiscard]] bool adjacent(VertexId u, VertexId v) const {
    return matrix_[u * adjacency_.size() + v] != 0;
  }
  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const;
  [[nodiscard]] std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// All edges (i, j) with i < j, sorted.
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] bool has_labels() const { return !labels_.empty(); }
  [[nodiscard]] std::span<const Point> labels() const { return labels_; }
  [[nodiscard]] const Point& label(VertexId v) const { return labels_.at(v); }

  /// Subgraph induced by `keep` (ascending ids); vertex i of the result is keep[i].
  [[nodiscard]] UndirectedGraph induced(std::span<const VertexId> keep) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::uint8_t> matrix_;
  std::vector<Point> labels_;
  std::size_t edge_count_ = 0;
};

}  // namespace niche
