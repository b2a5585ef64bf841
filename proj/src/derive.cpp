#include "niche/derive.hpp"

#include <cstdint>
#include <vector>

namespace niche {
namespace {

bool combine(GraphKind kind, bool prey, bool predator) {
  switch (kind) {
    case GraphKind::Competition: return prey;
    case GraphKind::CommonEnemy: return predator;
    case GraphKind::Cce: return prey && predator;
    case GraphKind::Niche: return prey || predator;
  }
  return false;
}

bool adjacent_reference(const Dpo& d, GraphKind kind, VertexId u, VertexId v) {
  const Point lo = min_corner(d.point(u), d.point(v));
  const Point hi = max_corner(d.point(u), d.point(v));
  bool prey = false;
  bool predator = false;
  for (const Point& z : d.vertices()) {
    prey = prey || strictly_below(z, lo);
    predator = predator || strictly_below(hi, z);
  }
  return combine(kind, prey, predator);
}

bool adjacent_staircase(const Dpo& d, GraphKind kind, VertexId u, VertexId v) {
  const bool need_prey = kind != GraphKind::CommonEnemy;
  const bool need_predator = kind != GraphKind::Competition;
  const bool prey = need_prey && d.any_strictly_below(min_corner(d.point(u), d.point(v)));
  if (kind == GraphKind::Niche && prey) return true;
  if (kind == GraphKind::Cce && !prey) return false;
  const bool predator = need_predator && d.any_strictly_above(max_corner(d.point(u), d.point(v)));
  return combine(kind, prey, predator);
}

}  // namespace

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Competition: return "competition";
    case GraphKind::CommonEnemy: return "common-enemy";
    case GraphKind::Cce: return "cce";
    case GraphKind::Niche: return "niche";
  }
  return "?";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  for (GraphKind k : {GraphKind::Competition, GraphKind::CommonEnemy, GraphKind::Cce, GraphKind::Niche}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(WitnessKind kind) { return kind == WitnessKind::Prey ? "prey" : "predator"; }

UndirectedGraph derive_graph(const Dpo& d, GraphKind kind, DeriveMethod method) {
  const std::size_t n = d.size();
  UndirectedGraph g(std::vector<Point>(d.vertices().begin(), d.vertices().end()));
  if (method == DeriveMethod::Reference) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (adjacent_reference(d, kind, u, v)) g.add_edge(u, v);
      }
    }
    return g;
  }
  // Upper-triangle bits filled in parallel, then inserted serially so the
  // adjacency lists are built in one deterministic order.
  std::vector<std::uint8_t> bits(n * n, 0);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8) if (n >= 256)
  for (std::int64_t row = 0; row < rows; ++row) {
    const auto u = static_cast<VertexId>(row);
    for (VertexId v = u + 1; v < n; ++v) {
      bits[u * n + v] = adjacent_staircase(d, kind, u, v) ? 1 : 0;
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (bits[u * n + v] != 0) g.add_edge(u, v);
    }
  }
  return g;
}

std::optional<EdgeWitness> find_edge_witness(const Dpo& d, VertexId u, VertexId v) {
  if (auto z = d.common_prey_witness(u, v)) return EdgeWitness{*z, d.point(*z), WitnessKind::Prey};
  if (auto z = d.common_predator_witness(u, v)) return EdgeWitness{*z, d.point(*z), WitnessKind::Predator};
  return std::nullopt;
}

}  // namespace niche
