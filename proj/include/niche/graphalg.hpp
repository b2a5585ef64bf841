#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "niche/derive.hpp"
#include "niche/graph.hpp"

namespace niche {

/// Vertex permutation. As returned by lexbfs_order it is a visit order; as
/// returned by perfect_elimination_order it is an elimination order.
struct EliminationOrder {
  std::vector<VertexId> order;

  friend bool operator==(const EliminationOrder&, const EliminationOrder&) = default;
};

struct AsteroidalTriple {
  VertexId u;
  VertexId v;
  VertexId w;

  friend bool operator==(const AsteroidalTriple&, const AsteroidalTriple&) = default;
};

/// Induced cycle, listed in cyclic order. `witnesses` is either empty or
/// holds one entry per edge (cycle[i], cycle[i+1 mod len]).
struct CycleCertificate {
  std::vector<VertexId> cycle;
  std::vector<EdgeWitness> witnesses;
};

[[nodiscard]] std::optional<std::array<VertexId, 3>> find_triangle(const UndirectedGraph& g);
[[nodiscard]] inline bool is_triangle_free(const UndirectedGraph& g) { return !find_triangle(g).has_value(); }

/// Open neighbourhood, ascending.
[[nodiscard]] std::vector<VertexId> neighborhood(const UndirectedGraph& g, VertexId v);

/// Lexicographic breadth-first search visit order; ties go to the smallest id.
[[nodiscard]] EliminationOrder lexbfs_order(const UndirectedGraph& g);

/// Every vertex's later neighbours form a clique. Throws InvalidSequence
/// if `order` is not a permutation of the vertices.
[[nodiscard]] bool is_perfect_elimination_order(const UndirectedGraph& g, const EliminationOrder& order);

/// Reverse Lex-BFS order when it is a perfect elimination order.
[[nodiscard]] std::optional<EliminationOrder> perfect_elimination_order(const UndirectedGraph& g);
[[nodiscard]] inline bool is_chordal(const UndirectedGraph& g) { return perfect_elimination_order(g).has_value(); }

/// Some induced cycle of length >= 4; absent iff the graph is chordal.
[[nodiscard]] std::optional<CycleCertificate> find_hole(const UndirectedGraph& g);

/// Lexicographically smallest asteroidal triple, if any.
[[nodiscard]] std::optional<AsteroidalTriple> find_asteroidal_triple(const UndirectedGraph& g);

struct IntervalVerdict {
  bool interval = true;
  std::optional<CycleCertificate> hole;
  std::optional<AsteroidalTriple> asteroidal_triple;
};

/// Interval iff chordal and free of asteroidal triples. A failing verdict
/// carries a hole when the graph is not chordal, else an asteroidal triple.
[[nodiscard]] IntervalVerdict check_interval(const UndirectedGraph& g);
[[nodiscard]] inline bool is_interval(const UndirectedGraph& g) { return check_interval(g).interval; }

/// Component label per vertex, labels numbered by smallest member.
[[nodiscard]] std::vector<std::size_t> connected_components(const UndirectedGraph& g);

struct PathViolation {
  enum class Reason { HighDegree, Cycle };
  Reason reason;
  /// HighDegree: the vertex followed by three of its neighbours.
  /// Cycle: the cycle in order.
  std::vector<VertexId> vertices;
};

[[nodiscard]] std::optional<PathViolation> find_path_violation(const UndirectedGraph& g);
[[nodiscard]] inline bool components_are_paths(const UndirectedGraph& g) { return !find_path_violation(g).has_value(); }

/// Consecutive (cyclic) pairs adjacent and all others not. Throws
/// InvalidSequence for fewer than three or repeated vertices.
[[nodiscard]] bool verify_induced_cycle(const UndirectedGraph& g, std::span<const VertexId> seq);

/// Some induced 4-cycle, in cyclic order.
[[nodiscard]] std::optional<std::array<VertexId, 4>> find_induced_c4(const UndirectedGraph& g);
[[nodiscard]] inline bool has_induced_c4(const UndirectedGraph& g) { return find_induced_c4(g).has_value(); }

}  // namespace niche
