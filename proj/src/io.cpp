#include "niche/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "niche/errors.hpp"

namespace niche::io {
namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void expect_format(const Json& doc, std::string_view format) {
  if (!doc.is_object() || !doc.contains("format") || doc["format"] != format) {
    throw ParseError("expected format \"" + std::string(format) + "\"");
  }
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("coordinate must be a string");
  return Rational::parse(j.get<std::string>());
}

std::string scaled(const Rational& r, int scale) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", (r * Rational(scale)).to_double());
  return buf;
}

}  // namespace

Json point_to_json(const Point& p) {
  Json j;
  j["x"] = p.x1.to_string();
  j["y"] = p.x2.to_string();
  return j;
}

Point point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y") || j.size() != 2) {
    throw ParseError("a point is an object with exactly \"x\" and \"y\"");
  }
  return {rational_from_json(j["x"]), rational_from_json(j["y"])};
}

Json points_to_json(std::span<const Point> points) {
  Json arr = Json::array();
  for (const Point& p : points) arr.push_back(point_to_json(p));
  return arr;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string write_point_file(std::span<const Point> points) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  Json doc;
  doc["format"] = kPointFormat;
  doc["points"] = points_to_json(sorted);
  return dump(doc);
}

std::vector<Point> parse_point_file(std::string_view text) {
  const Json doc = parse_json(text);
  expect_format(doc, kPointFormat);
  if (!doc.contains("points") || !doc["points"].is_array()) throw ParseError("\"points\" must be an array");
  std::vector<Point> out;
  std::set<Point> seen;
  for (const Json& j : doc["points"]) {
    Point p = point_from_json(j);
    if (!seen.insert(p).second) throw DuplicatePoint("duplicate point " + p.to_string());
    out.push_back(p);
  }
  return out;
}

std::string write_graph_file(const UndirectedGraph& g, GraphKind kind) {
  if (!g.has_labels()) throw std::invalid_argument("graph export needs point labels");
  Json doc;
  doc["format"] = kGraphFormat;
  doc["kind"] = std::string(to_string(kind));
  doc["vertices"] = points_to_json(g.labels());
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  doc["edges"] = std::move(edges);
  return dump(doc);
}

GraphFile parse_graph_file(std::string_view text) {
  const Json doc = parse_json(text);
  expect_format(doc, kGraphFormat);
  GraphFile out;
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw ParseError("\"kind\" must be a string");
    out.kind = parse_graph_kind(doc["kind"].get<std::string>());
    if (!out.kind) throw ParseError("unknown graph kind");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<Point> vertices;
  for (const Json& j : doc["vertices"]) vertices.push_back(point_from_json(j));
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (!(vertices[i - 1] < vertices[i])) throw ParseError("vertices must be distinct and sorted");
  }
  UndirectedGraph g(std::move(vertices));
  for (const Json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ParseError("an edge is a pair of vertex indices");
    }
    const auto u = e[0].get<VertexId>();
    const auto v = e[1].get<VertexId>();
    if (u >= v || v >= g.size()) throw ParseError("edge [i,j] needs i < j < vertex count");
    if (g.adjacent(u, v)) throw ParseError("repeated edge");
    g.add_edge(u, v);
  }
  out.graph = std::move(g);
  return out;
}

std::string detect_format(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string()) return {};
  return doc["format"].get<std::string>();
}

std::string write_dot(const UndirectedGraph& g, const DotOptions& options) {
  std::set<Edge> bold;
  const auto& cyc = options.highlight_cycle;
  for (std::size_t i = 0; i < cyc.size() && cyc.size() >= 2; ++i) {
    const VertexId a = cyc[i];
    const VertexId b = cyc[(i + 1) % cyc.size()];
    bold.insert({std::min(a, b), std::max(a, b)});
  }
  std::ostringstream os;
  os << "graph " << options.name << " {\n";
  os << "  node [shape=circle, width=0.12, fixedsize=true, label=\"\"];\n";
  for (VertexId v = 0; v < g.size(); ++v) {
    os << "  v" << v;
    if (g.has_labels()) {
      const Point& p = g.label(v);
      os << " [xlabel=\"" << p.to_string() << "\", pos=\"" << scaled(p.x1, options.scale) << ","
         << scaled(p.x2, options.scale) << "!\"]";
    }
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    os << "  v" << u << " -- v" << v;
    if (bold.count({u, v}) != 0) os << " [style=bold, penwidth=3]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

Json certificate_to_json(const CertifiedWitness& w) {
  const auto& cert = w.certificate;
  Json doc;
  doc["format"] = kCertificateFormat;
  doc["n"] = w.bundle.spec.n;
  doc["k"] = w.bundle.spec.k;
  doc["parity"] = w.bundle.spec.parity == Parity::Even ? "even" : "odd";
  doc["cycle_ids"] = cert.cycle;
  doc["cycle"] = points_to_json(w.bundle.cycle_sequence);
  Json edges = Json::array();
  for (std::size_t i = 0; i < cert.cycle.size(); ++i) {
    const VertexId u = cert.cycle[i];
    const VertexId v = cert.cycle[(i + 1) % cert.cycle.size()];
    Json e;
    e["u"] = point_to_json(w.dpo.point(u));
    e["v"] = point_to_json(w.dpo.point(v));
    e["kind"] = std::string(to_string(cert.witnesses[i].kind));
    e["witness"] = point_to_json(cert.witnesses[i].point);
    edges.push_back(std::move(e));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

}  // namespace niche::io
