#include <doctest.h>

#include "niche/errors.hpp"
#include "niche/io.hpp"
#include "niche/witness.hpp"
#include "oracles.hpp"

namespace io = niche::io;
using niche::Point;
using niche::Rational;
using oracle::pt;

TEST_CASE("point files") {
  const std::vector<Point> pts{pt(2, 1), {Rational(2, 3), Rational(-5, 3)}, pt(0, 0)};
  const std::string text = io::write_point_file(pts);
  CHECK(text ==
        "{\n"
        "  \"format\": \"dpo-points/1\",\n"
        "  \"points\": [\n"
        "    {\n      \"x\": \"0\",\n      \"y\": \"0\"\n    },\n"
        "    {\n      \"x\": \"2/3\",\n      \"y\": \"-5/3\"\n    },\n"
        "    {\n      \"x\": \"2\",\n      \"y\": \"1\"\n    }\n"
        "  ]\n"
        "}\n");
  const auto back = io::parse_point_file(text);
  CHECK(io::write_point_file(back) == text);
  CHECK(io::detect_format(text) == "dpo-points/1");

  CHECK(io::parse_point_file(R"({"format":"dpo-points/1","points":[]})").empty());
  CHECK_THROWS_AS((void)io::parse_point_file("{"), niche::ParseError);
  CHECK_THROWS_AS((void)io::parse_point_file(R"({"format":"dpo-graph/1","points":[]})"), niche::ParseError);
  CHECK_THROWS_AS((void)io::parse_point_file(R"({"format":"dpo-points/1","points":[{"x":"2/4","y":"0"}]})"),
                  niche::ParseError);
  CHECK_THROWS_AS((void)io::parse_point_file(R"({"format":"dpo-points/1","points":[{"x":1,"y":"0"}]})"),
                  niche::ParseError);
  CHECK_THROWS_AS((void)io::parse_point_file(R"({"format":"dpo-points/1","points":[{"x":"1","y":"0","z":"1"}]})"),
                  niche::ParseError);
  CHECK_THROWS_AS(
      (void)io::parse_point_file(R"({"format":"dpo-points/1","points":[{"x":"1","y":"0"},{"x":"1","y":"0"}]})"),
      niche::DuplicatePoint);
}

TEST_CASE("graph files") {
  const auto w = niche::certify_witness(6);
  const std::string text = io::write_graph_file(w.niche, niche::GraphKind::Niche);
  const auto parsed = io::parse_graph_file(text);
  REQUIRE(parsed.kind);
  CHECK(*parsed.kind == niche::GraphKind::Niche);
  CHECK(parsed.graph == w.niche);
  CHECK(io::write_graph_file(parsed.graph, niche::GraphKind::Niche) == text);
  CHECK(io::detect_format(text) == "dpo-graph/1");

  const auto bare = io::parse_graph_file(
      R"({"format":"dpo-graph/1","vertices":[{"x":"0","y":"0"},{"x":"1","y":"1"}],"edges":[[0,1]]})");
  CHECK_FALSE(bare.kind);
  CHECK(bare.graph.adjacent(0, 1));

  const std::string two = R"("vertices":[{"x":"0","y":"0"},{"x":"1","y":"1"}])";
  CHECK_THROWS_AS((void)io::parse_graph_file(R"({"format":"dpo-graph/1",)" + two + R"(,"edges":[[1,0]]})"),
                  niche::ParseError);
  CHECK_THROWS_AS((void)io::parse_graph_file(R"({"format":"dpo-graph/1",)" + two + R"(,"edges":[[0,2]]})"),
                  niche::ParseError);
  CHECK_THROWS_AS((void)io::parse_graph_file(R"({"format":"dpo-graph/1",)" + two + R"(,"edges":[[0,1],[0,1]]})"),
                  niche::ParseError);
  CHECK_THROWS_AS(
      (void)io::parse_graph_file(
          R"({"format":"dpo-graph/1","vertices":[{"x":"1","y":"1"},{"x":"0","y":"0"}],"edges":[]})"),
      niche::ParseError);
  CHECK_THROWS_AS(
      (void)io::parse_graph_file(R"({"format":"dpo-graph/1","kind":"bogus",)" + two + R"(,"edges":[]})"),
      niche::ParseError);
  CHECK(io::detect_format("{}").empty());
}

TEST_CASE("dot output") {
  const auto w = niche::certify_witness(4);
  io::DotOptions opt;
  opt.name = "witness";
  opt.highlight_cycle = w.certificate.cycle;
  const std::string dot = io::write_dot(w.niche, opt);
  CHECK(dot.rfind("graph witness {\n", 0) == 0);
  CHECK(dot.find("pos=\"-100.00,100.00!\"") != std::string::npos);
  std::size_t bold = 0;
  for (std::size_t at = dot.find("penwidth=3"); at != std::string::npos; at = dot.find("penwidth=3", at + 1)) ++bold;
  CHECK(bold == 4);

  niche::UndirectedGraph g(std::vector<Point>{{Rational(1, 3), Rational(0)}, pt(1, 1)});
  g.add_edge(0, 1);
  opt.highlight_cycle.clear();
  opt.scale = 30;
  const std::string small = io::write_dot(g, opt);
  CHECK(small.find("pos=\"10.00,0.00!\"") != std::string::npos);
  CHECK(small.find("penwidth") == std::string::npos);
}

TEST_CASE("certificate json") {
  const auto w = niche::certify_witness(6);
  const auto j = io::certificate_to_json(w);
  CHECK(j["format"] == "dpo-certificate/1");
  CHECK(j["n"] == 6);
  CHECK(j["k"] == 3);
  CHECK(j["parity"] == "even");
  CHECK(j["cycle"].size() == 6);
  CHECK(io::dump(j).back() == '\n');
}
