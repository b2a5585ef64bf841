#include "niche/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "niche/errors.hpp"

namespace niche {

UndirectedGraph::UndirectedGraph(std::size_t n) : adjacency_(n), matrix_(n * n, 0) {}

UndirectedGraph::UndirectedGraph(std::vector<Point> labels) : UndirectedGraph(labels.size()) {
  labels_ = std::move(labels);
}

void UndirectedGraph::add_edge(VertexId u, VertexId v) {
  const std::size_t n = adjacency_.size();
  if (u >= n || v >= n) throw UnknownVertex("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adjacent(u, v)) return;
  matrix_[u * n + v] = matrix_[v * n + u] = 1;
  auto& au = adjacency_[u];
  au.insert(std::upper_bound(au.begin(), au.end(), v), v);
  auto& av = adjacency_[v];
  av.insert(std::upper_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
}

std::span<const VertexId> UndirectedGraph::neighbors(VertexId v) const {
  if (v >= adjacency_.size()) throw UnknownVertex("unknown vertex " + std::to_string(v));
  return adjacency_[v];
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

UndirectedGraph UndirectedGraph::induced(std::span<const VertexId> keep) const {
  std::vector<Point> sub_labels;
  if (has_labels()) {
    for (VertexId v : keep) sub_labels.push_back(labels_.at(v));
  }
  UndirectedGraph sub = has_labels() ? UndirectedGraph(std::move(sub_labels)) : UndirectedGraph(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) sub.add_edge(i, j);
    }
  }
  return sub;
}

}  // namespace niche
