#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "niche/dpo.hpp"
#include "niche/graph.hpp"

namespace niche {

enum class GraphKind { Competition, CommonEnemy, Cce, Niche };

[[nodiscard]] std::string_view to_string(GraphKind kind);
/// Accepts "competition", "common-enemy", "cce", "niche".
[[nodiscard]] std::optional<GraphKind> parse_graph_kind(std::string_view name);

/// How adjacency is decided per pair.
enum class DeriveMethod {
  /// Linear scan of the corner regions; O(n) per pair, serial.
  Reference,
  /// Binary search on the prefix-min / suffix-max staircases; O(log n) per
  /// pair, rows distributed over OpenMP threads for larger inputs.
  Staircase,
};

/// Derived graph of the given kind; labels carry the points.
[[nodiscard]] UndirectedGraph derive_graph(const Dpo& d, GraphKind kind,
                                           DeriveMethod method = DeriveMethod::Staircase);

[[nodiscard]] inline UndirectedGraph competition_graph(const Dpo& d) { return derive_graph(d, GraphKind::Competition); }
[[nodiscard]] inline UndirectedGraph common_enemy_graph(const Dpo& d) { return derive_graph(d, GraphKind::CommonEnemy); }
[[nodiscard]] inline UndirectedGraph cce_graph(const Dpo& d) { return derive_graph(d, GraphKind::Cce); }
[[nodiscard]] inline UndirectedGraph niche_graph(const Dpo& d) { return derive_graph(d, GraphKind::Niche); }

enum class WitnessKind { Prey, Predator };

[[nodiscard]] std::string_view to_string(WitnessKind kind);

/// Point responsible for a niche edge.
struct EdgeWitness {
  VertexId vertex;
  Point point;
  WitnessKind kind;

  friend bool operator==(const EdgeWitness&, const EdgeWitness&) = default;
};

/// Common prey of smallest id if any, else common predator of smallest id.
[[nodiscard]] std::optional<EdgeWitness> find_edge_witness(const Dpo& d, VertexId u, VertexId v);

}  // namespace niche
