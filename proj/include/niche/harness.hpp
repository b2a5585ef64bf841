#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "niche/derive.hpp"
#include "niche/dpo.hpp"
#include "niche/graph.hpp"
#include "niche/graphalg.hpp"
#include "niche/io.hpp"

namespace niche::harness {

using Json = io::Json;

/// Random instance parameters. An instance depends only on (seed, index).
struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t min_points = 1;
  std::size_t max_points = 12;
  std::int64_t box_lo = 0;
  std::int64_t box_hi = 9;
  /// When set, roughly half of the instances move coordinates by ±1/3
  /// (staying inside the box); otherwise every instance is integral.
  bool third_offsets = true;
  std::uint64_t trials = 10000;
};

/// Deterministic per-trial generator.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0);

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

[[nodiscard]] std::vector<Point> random_points(const GeneratorConfig& cfg, std::uint64_t index);
[[nodiscard]] Dpo random_dpo(const GeneratorConfig& cfg, std::uint64_t index);

/// Random simple graph with 1..max_vertices vertices and a per-graph edge density.
[[nodiscard]] UndirectedGraph random_graph(std::uint64_t seed, std::uint64_t index, std::size_t max_vertices);

enum class Status { Pass, Fail, NotApplicable };
[[nodiscard]] std::string_view to_string(Status s);

struct Verdict {
  Status status = Status::Pass;
  Json detail;  ///< counterexample payload on Fail, reason on NotApplicable

  static Verdict pass() { return {}; }
  static Verdict not_applicable(std::string reason) { return {Status::NotApplicable, Json(std::move(reason))}; }
  static Verdict fail(Json detail) { return {Status::Fail, std::move(detail)}; }
};

/// Lattice points on L_c ∪ L_{c+2}; every other point strictly between.
struct LayeredFamily {
  PointSet points;
  Rational c;
};

[[nodiscard]] bool is_layered(const PointSet& points, const Rational& c);

/// Smallest valid c. Candidates are s and s-2 for lattice diagonal sums s;
/// without lattice points they are s-1 for the remaining sums (0 for an
/// empty set).
[[nodiscard]] std::optional<Rational> infer_layering(const PointSet& points);

/// Throws InvalidParameter unless the points are layered at c.
[[nodiscard]] LayeredFamily make_layered_family(PointSet points, Rational c);
[[nodiscard]] LayeredFamily random_layered_family(std::uint64_t seed, std::uint64_t index);

/// Lattice points u, v with u1 <= v1, other than the pairs v = u + (1,-1),
/// are never adjacent in the niche graph.
[[nodiscard]] Verdict check_lemma_layered(const LayeredFamily& family);

/// In a triangle-free niche graph every 2-path x~y~z with x1 <= z1 is a
/// staircase x ↘ y ↘ z.
[[nodiscard]] Verdict check_staircase_lemma(const Dpo& d, const UndirectedGraph& niche);
[[nodiscard]] Verdict check_staircase_lemma(const Dpo& d);

/// Triangle-free niche graph: components are paths and the graph is interval.
[[nodiscard]] Verdict check_path_components(const Dpo& d, const UndirectedGraph& niche);
[[nodiscard]] Verdict check_path_components(const Dpo& d);

/// The competition graph is interval.
[[nodiscard]] Verdict check_competition_interval(const Dpo& d);

/// A CCE graph without an induced 4-cycle is interval.
[[nodiscard]] Verdict check_cce_interval(const Dpo& d);

/// Union/intersection identities, point-reflection duality, translation and
/// axis-swap invariance, and agreement of the two derivation methods.
[[nodiscard]] Verdict check_identities(const Dpo& d);

/// On graphs of at most 8 vertices: is_chordal and find_asteroidal_triple
/// agree with the exhaustive oracles.
[[nodiscard]] Verdict check_oracle_agreement(const UndirectedGraph& g);

inline constexpr std::size_t kOracleLimit = 8;

/// Some vertex permutation is a perfect elimination order, by exhaustive
/// search. Throws TooLarge above kOracleLimit vertices.
[[nodiscard]] bool oracle_is_chordal(const UndirectedGraph& g);

/// Asteroidal triple by enumerating simple paths. Throws TooLarge above
/// kOracleLimit vertices.
[[nodiscard]] std::optional<AsteroidalTriple> oracle_find_at(const UndirectedGraph& g);

enum class Execution { Serial, Parallel };

inline constexpr std::array<std::string_view, 5> kSuiteChecks = {
    "competition_interval", "triangle_free_paths", "cce_interval", "staircase", "identities"};

struct CheckCounts {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t not_applicable = 0;

  friend bool operator==(const CheckCounts&, const CheckCounts&) = default;
};

struct SuiteResult {
  GeneratorConfig config;
  std::array<CheckCounts, kSuiteChecks.size()> counts{};
  std::uint64_t oracle_checked = 0;
  std::uint64_t oracle_failures = 0;
  /// One trial report per failing trial, ascending index.
  std::vector<Json> failures;

  [[nodiscard]] std::uint64_t total_failures() const;
  [[nodiscard]] Json summary() const;
};

/// Runs every checker on cfg.trials random instances. Results do not depend
/// on the execution mode.
[[nodiscard]] SuiteResult run_suite(const GeneratorConfig& cfg, Execution exec = Execution::Parallel);

/// All checker verdicts for one instance, as a trial report.
[[nodiscard]] Json trial_report(const GeneratorConfig& cfg, std::uint64_t index);

struct SearchResult {
  GeneratorConfig config;
  std::uint64_t chordal = 0;
  std::uint64_t interval = 0;
  std::uint64_t triangle_free = 0;
  std::uint64_t reverified = 0;
  /// Chordal but not interval niche graphs, ascending index.
  std::vector<Json> hits;

  [[nodiscard]] Json summary() const;
};

/// Looks for niche graphs that are chordal yet not interval. Every hit is
/// re-verified as chordal, asteroidal-triple-bearing and triangle-containing.
[[nodiscard]] SearchResult search_open_question(const GeneratorConfig& cfg, Execution exec = Execution::Parallel);

/// Hit report for one instance, or nullopt when it is not a hit.
[[nodiscard]] std::optional<Json> search_trial(const GeneratorConfig& cfg, std::uint64_t index);

}  // namespace niche::harness
