// nichegraph: command-line front end for dominance-order graphs.
//
//   nichegraph witness --n 8 --out DIR [--dot]
//   nichegraph derive  --input points.json --graph niche --out graph.json [--dot]
//   nichegraph check   --input FILE --property interval [--graph niche]
//   nichegraph suite   --seed 1 --trials 10000 --max-points 12 [--thirds]
//   nichegraph search  --seed 1 --trials 100000 --max-points 12 --out report.jsonl
//
// Exit codes: 0 success / property holds, 1 property fails or suite
// failures, 2 usage or input error, 3 witness certification failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "niche/derive.hpp"
#include "niche/dpo.hpp"
#include "niche/errors.hpp"
#include "niche/graphalg.hpp"
#include "niche/harness.hpp"
#include "niche/io.hpp"
#include "niche/witness.hpp"

namespace fs = std::filesystem;
using niche::io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kCertification = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
  if (!out) throw UsageError("write failed for " + path.string());
}

fs::path dot_path_for(const fs::path& out) {
  fs::path p = out;
  if (p.extension() == ".json") return p.replace_extension(".dot");
  return fs::path(out.string() + ".dot");
}

niche::GraphKind parse_kind(const std::string& name) {
  const auto kind = niche::parse_graph_kind(name);
  if (!kind) throw UsageError("unknown graph kind: " + name);
  return *kind;
}

Json points_of(const niche::UndirectedGraph& g, std::span<const niche::VertexId> ids) {
  Json arr = Json::array();
  for (niche::VertexId v : ids) arr.push_back(niche::io::point_to_json(g.label(v)));
  return arr;
}

// --- witness ---------------------------------------------------------------

struct WitnessArgs {
  int n = 0;
  std::string out;
  bool dot = false;
  int scale = 100;
};

int cmd_witness(const WitnessArgs& a) {
  if (a.n < 4) throw UsageError("--n must be at least 4");
  std::string out = a.out;
  if (out.empty()) {
    const char* env = std::getenv("NICHEGRAPH_OUT");
    if (env == nullptr) throw UsageError("--out is required (or set NICHEGRAPH_OUT)");
    out = env;
  }
  niche::CertifiedWitness w;
  try {
    w = niche::certify_witness(a.n);
  } catch (const niche::CertificationFailure& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return kCertification;
  }
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw UsageError("cannot create " + out + ": " + ec.message());
  const fs::path dir(out);
  const std::string stem = "witness-n" + std::to_string(a.n);
  write_file(dir / (stem + "-points.json"), niche::io::write_point_file(w.bundle.points.points()));
  write_file(dir / (stem + "-niche.json"), niche::io::write_graph_file(w.niche, niche::GraphKind::Niche));
  write_file(dir / (stem + "-certificate.json"), niche::io::dump(niche::io::certificate_to_json(w)));
  if (a.dot) {
    niche::io::DotOptions opts;
    opts.name = "D" + std::to_string(a.n);
    opts.scale = a.scale;
    opts.highlight_cycle = w.certificate.cycle;
    write_file(dir / (stem + ".dot"), niche::io::write_dot(w.niche, opts));
  }
  std::cout << "certified induced C_" << a.n << " on " << w.bundle.points.size() << " points in " << out << "\n";
  return kOk;
}

// --- derive ----------------------------------------------------------------

struct DeriveArgs {
  std::string input;
  std::string graph = "niche";
  std::string out;
  bool dot = false;
  int scale = 100;
};

int cmd_derive(const DeriveArgs& a) {
  const auto kind = parse_kind(a.graph);
  const auto points = niche::io::parse_point_file(read_file(a.input));
  const niche::Dpo d = niche::build_dpo(points);
  const niche::UndirectedGraph g = niche::derive_graph(d, kind);
  write_file(a.out, niche::io::write_graph_file(g, kind));
  if (a.dot) {
    niche::io::DotOptions opts;
    opts.scale = a.scale;
    write_file(dot_path_for(a.out), niche::io::write_dot(g, opts));
  }
  return kOk;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  std::string input;
  std::string property;
  std::string graph = "niche";
};

int cmd_check(const CheckArgs& a) {
  const std::string text = read_file(a.input);
  const std::string format = niche::io::detect_format(text);
  niche::UndirectedGraph g;
  std::string kind_name;
  if (format == niche::io::kPointFormat) {
    const auto kind = parse_kind(a.graph);
    g = niche::derive_graph(niche::build_dpo(niche::io::parse_point_file(text)), kind);
    kind_name = std::string(niche::to_string(kind));
  } else if (format == niche::io::kGraphFormat) {
    auto file = niche::io::parse_graph_file(text);
    g = std::move(file.graph);
    if (file.kind) kind_name = std::string(niche::to_string(*file.kind));
  } else {
    throw UsageError("unrecognised input format \"" + format + "\"");
  }

  Json report;
  report["property"] = a.property;
  if (!kind_name.empty()) report["graph"] = kind_name;
  report["vertices"] = g.size();
  report["edges"] = g.edge_count();
  Json cert;
  bool holds = true;
  if (a.property == "interval") {
    const auto v = niche::check_interval(g);
    holds = v.interval;
    if (v.hole) cert["hole"] = points_of(g, v.hole->cycle);
    if (v.asteroidal_triple) {
      const std::array<niche::VertexId, 3> ids{v.asteroidal_triple->u, v.asteroidal_triple->v, v.asteroidal_triple->w};
      cert["asteroidal_triple"] = points_of(g, ids);
    }
  } else if (a.property == "chordal") {
    const auto hole = niche::find_hole(g);
    holds = !hole;
    if (hole) cert["hole"] = points_of(g, hole->cycle);
  } else if (a.property == "triangle-free") {
    const auto tri = niche::find_triangle(g);
    holds = !tri;
    if (tri) cert["triangle"] = points_of(g, *tri);
  } else if (a.property == "paths") {
    const auto violation = niche::find_path_violation(g);
    holds = !violation;
    if (violation) {
      cert["reason"] = violation->reason == niche::PathViolation::Reason::HighDegree ? "degree" : "cycle";
      cert["vertices"] = points_of(g, violation->vertices);
    }
  } else if (a.property == "at-free") {
    const auto at = niche::find_asteroidal_triple(g);
    holds = !at;
    if (at) {
      const std::array<niche::VertexId, 3> ids{at->u, at->v, at->w};
      cert["asteroidal_triple"] = points_of(g, ids);
    }
  } else if (a.property == "induced-c4") {
    const auto c4 = niche::find_induced_c4(g);
    holds = !c4;
    if (c4) cert["induced_c4"] = points_of(g, *c4);
  } else {
    throw UsageError("unknown property: " + a.property);
  }
  report["holds"] = holds;
  if (!holds) report["certificate"] = std::move(cert);
  std::cout << niche::io::dump(report);
  return holds ? kOk : kFails;
}

// --- suite / search --------------------------------------------------------

struct RunArgs {
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
  std::size_t max_points = 12;
  bool thirds = false;
  bool serial = false;
  bool timing = false;
  std::string out;
};

niche::harness::GeneratorConfig config_for(const RunArgs& a) {
  niche::harness::GeneratorConfig cfg;
  cfg.seed = a.seed;
  cfg.trials = a.trials;
  cfg.max_points = a.max_points;
  cfg.third_offsets = a.thirds;
  return cfg;
}

int cmd_suite(const RunArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const auto result = niche::harness::run_suite(
      config_for(a), a.serial ? niche::harness::Execution::Serial : niche::harness::Execution::Parallel);
  Json summary = result.summary();
  if (a.timing) {
    summary["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start).count();
  }
  std::cout << niche::io::dump(summary);
  return result.total_failures() == 0 ? kOk : kFails;
}

int cmd_search(const RunArgs& a) {
  std::ofstream out(a.out, std::ios::binary);
  if (!out) throw UsageError("cannot write " + a.out);
  const auto start = std::chrono::steady_clock::now();
  const auto result = niche::harness::search_open_question(
      config_for(a), a.serial ? niche::harness::Execution::Serial : niche::harness::Execution::Parallel);
  for (const Json& hit : result.hits) out << hit.dump() << "\n";
  Json summary = result.summary();
  if (a.timing) {
    summary["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start).count();
  }
  out << summary.dump() << "\n";
  if (!out) throw UsageError("write failed for " + a.out);
  std::cout << niche::io::dump(summary);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competition, CCE and niche graphs of doubly partial orders"};
  app.require_subcommand(1);

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "Build and certify the induced C_n witness");
  witness->add_option("--n", wa.n, "Cycle length (>= 4)")->required();
  witness->add_option("--out", wa.out, "Output directory (default: $NICHEGRAPH_OUT)");
  witness->add_flag("--dot", wa.dot, "Also write a DOT drawing with the cycle in bold");
  witness->add_option("--scale", wa.scale, "DOT coordinate scale")->check(CLI::PositiveNumber);

  DeriveArgs da;
  auto* derive = app.add_subcommand("derive", "Derive a graph from a point file");
  derive->add_option("--input", da.input, "Point file")->required();
  derive->add_option("--graph", da.graph, "niche | competition | cce | common-enemy");
  derive->add_option("--out", da.out, "Graph file to write")->required();
  derive->add_flag("--dot", da.dot, "Also write a DOT drawing");
  derive->add_option("--scale", da.scale, "DOT coordinate scale")->check(CLI::PositiveNumber);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Test a graph property and print a certificate");
  check->add_option("--input", ca.input, "Point file or graph file")->required();
  check->add_option("--property", ca.property, "interval | chordal | triangle-free | paths | at-free | induced-c4")
      ->required();
  check->add_option("--graph", ca.graph, "Graph derived from a point file (default niche)");

  RunArgs sa;
  auto* suite = app.add_subcommand("suite", "Run every property checker on random instances");
  suite->add_option("--seed", sa.seed, "Seed");
  suite->add_option("--trials", sa.trials, "Number of random instances");
  suite->add_option("--max-points", sa.max_points, "Largest instance size");
  suite->add_flag("--thirds", sa.thirds, "Mix in coordinates offset by 1/3");
  suite->add_flag("--serial", sa.serial, "Run trials on one thread");
  suite->add_flag("--timing", sa.timing, "Add elapsed_ms to the summary");

  RunArgs ra;
  ra.trials = 100000;
  auto* search = app.add_subcommand("search", "Search for chordal niche graphs that are not interval");
  search->add_option("--seed", ra.seed, "Seed");
  search->add_option("--trials", ra.trials, "Number of random instances");
  search->add_option("--max-points", ra.max_points, "Largest instance size");
  search->add_option("--out", ra.out, "Line-delimited JSON report")->required();
  search->add_flag("--thirds", ra.thirds, "Mix in coordinates offset by 1/3");
  search->add_flag("--serial", ra.serial, "Run trials on one thread");
  search->add_flag("--timing", ra.timing, "Add elapsed_ms to the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*witness) return cmd_witness(wa);
    if (*derive) return cmd_derive(da);
    if (*check) return cmd_check(ca);
    if (*suite) return cmd_suite(sa);
    if (*search) return cmd_search(ra);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (*witness) std::cerr << witness->help();
    return kUsage;
  } catch (const niche::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
