#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "niche/derive.hpp"
#include "niche/graph.hpp"
#include "niche/witness.hpp"

namespace niche::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kPointFormat = "dpo-points/1";
inline constexpr std::string_view kGraphFormat = "dpo-graph/1";
inline constexpr std::string_view kCertificateFormat = "dpo-certificate/1";

/// {"x": "a/b", "y": "c"}
[[nodiscard]] Json point_to_json(const Point& p);
[[nodiscard]] Point point_from_json(const Json& j);
[[nodiscard]] Json points_to_json(std::span<const Point> points);

/// Canonical point file text: sorted points, two-space indent, trailing newline.
[[nodiscard]] std::string write_point_file(std::span<const Point> points);
/// Parsed points in file order. Throws ParseError (bad JSON, wrong format
/// tag, non-canonical rationals) or DuplicatePoint.
[[nodiscard]] std::vector<Point> parse_point_file(std::string_view text);

struct GraphFile {
  std::optional<GraphKind> kind;  ///< absent only for hand-written files
  UndirectedGraph graph;          ///< labelled with the vertex points
};

/// Canonical graph file; the graph must be labelled with sorted points.
[[nodiscard]] std::string write_graph_file(const UndirectedGraph& g, GraphKind kind);
[[nodiscard]] GraphFile parse_graph_file(std::string_view text);

/// Value of the "format" member, or empty when missing. Throws ParseError
/// on malformed JSON.
[[nodiscard]] std::string detect_format(std::string_view text);

struct DotOptions {
  std::string name = "G";
  int scale = 100;
  /// Cyclic vertex sequence whose consecutive edges are drawn bold.
  std::vector<VertexId> highlight_cycle;
};

/// Undirected DOT with pinned positions taken from the labels.
[[nodiscard]] std::string write_dot(const UndirectedGraph& g, const DotOptions& options);

[[nodiscard]] Json certificate_to_json(const CertifiedWitness& w);

[[nodiscard]] std::string dump(const Json& j);

}  // namespace niche::io
