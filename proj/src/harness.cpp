#include "niche/harness.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "niche/errors.hpp"

namespace niche::harness {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Json vertex_points(const UndirectedGraph& g, std::span<const VertexId> ids) {
  Json arr = Json::array();
  for (VertexId v : ids) arr.push_back(io::point_to_json(g.label(v)));
  return arr;
}

Json interval_failure(const UndirectedGraph& g, const IntervalVerdict& v) {
  Json j;
  if (v.hole) {
    j["hole"] = vertex_points(g, v.hole->cycle);
  } else if (v.asteroidal_triple) {
    const auto& at = *v.asteroidal_triple;
    const std::array<VertexId, 3> ids{at.u, at.v, at.w};
    j["asteroidal_triple"] = vertex_points(g, ids);
  }
  return j;
}

using LabeledEdges = std::set<std::pair<Point, Point>>;

LabeledEdges labeled_edges(const UndirectedGraph& g, const std::function<Point(const Point&)>& f) {
  LabeledEdges out;
  for (const auto& [u, v] : g.edges()) {
    Point a = f(g.label(u));
    Point b = f(g.label(v));
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

Point identity(const Point& p) { return p; }

Dpo transformed(const Dpo& d, const std::function<Point(const Point&)>& f) {
  std::vector<Point> pts;
  for (const Point& p : d.vertices()) pts.push_back(f(p));
  return Dpo(PointSet(std::move(pts)));
}

constexpr std::array<GraphKind, 4> kKinds = {GraphKind::Competition, GraphKind::CommonEnemy, GraphKind::Cce,
                                             GraphKind::Niche};

// Exhaustive path enumeration from `from` to `to` that never enters a
// blocked vertex.
bool path_exists(const UndirectedGraph& g, VertexId from, VertexId to, std::vector<bool>& blocked) {
  if (from == to) return true;
  blocked[from] = true;
  bool found = false;
  for (VertexId y : g.neighbors(from)) {
    if (!blocked[y] && path_exists(g, y, to, blocked)) {
      found = true;
      break;
    }
  }
  blocked[from] = false;
  return found;
}

bool avoids(const UndirectedGraph& g, VertexId a, VertexId b, VertexId third) {
  std::vector<bool> blocked(g.size(), false);
  blocked[third] = true;
  for (VertexId y : g.neighbors(third)) blocked[y] = true;
  return path_exists(g, a, b, blocked);
}

bool extend_elimination(const UndirectedGraph& g, std::vector<bool>& placed, std::size_t depth) {
  if (depth == g.size()) return true;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (placed[v]) continue;
    // Every unplaced vertex comes later, so v's later neighbours are fixed now.
    std::vector<VertexId> later;
    for (VertexId u : g.neighbors(v)) {
      if (!placed[u]) later.push_back(u);
    }
    bool clique = true;
    for (std::size_t i = 0; i < later.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < later.size() && clique; ++j) clique = g.adjacent(later[i], later[j]);
    }
    if (!clique) continue;
    placed[v] = true;
    if (extend_elimination(g, placed, depth + 1)) return true;
    placed[v] = false;
  }
  return false;
}

void require_small(const UndirectedGraph& g) {
  if (g.size() > kOracleLimit) {
    throw TooLarge("oracle limited to " + std::to_string(kOracleLimit) + " vertices, got " +
                   std::to_string(g.size()));
  }
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["status"] = std::string(to_string(v.status));
  if (!v.detail.is_null()) j["detail"] = v.detail;
  return j;
}

struct TrialOutcome {
  std::array<Status, kSuiteChecks.size()> status{};
  bool oracle_checked = false;
  bool oracle_failed = false;
  std::optional<Json> report;
};

TrialOutcome run_trial(const GeneratorConfig& cfg, std::uint64_t index, bool always_report) {
  TrialOutcome out;
  Json verdicts;
  bool failed = false;
  std::vector<Point> pts = random_points(cfg, index);
  Json stats;
  try {
    const Dpo d{PointSet(pts)};
    const UndirectedGraph niche = niche_graph(d);
    const std::array<Verdict, kSuiteChecks.size()> results = {
        check_competition_interval(d), check_path_components(d, niche), check_cce_interval(d),
        check_staircase_lemma(d, niche), check_identities(d)};
    for (std::size_t i = 0; i < results.size(); ++i) {
      out.status[i] = results[i].status;
      failed = failed || results[i].status == Status::Fail;
      verdicts[std::string(kSuiteChecks[i])] = verdict_json(results[i]);
    }
    const Verdict oracle = check_oracle_agreement(niche);
    out.oracle_checked = oracle.status != Status::NotApplicable;
    out.oracle_failed = oracle.status == Status::Fail;
    failed = failed || out.oracle_failed;
    verdicts["oracle_agreement"] = verdict_json(oracle);

    stats["vertices"] = d.size();
    for (GraphKind k : kKinds) stats[std::string(to_string(k)) + "_edges"] = derive_graph(d, k).edge_count();
    stats["niche_triangle_free"] = is_triangle_free(niche);
  } catch (const std::exception& e) {
    failed = true;
    out.status.fill(Status::Fail);
    verdicts["error"] = e.what();
  }
  if (failed || always_report) {
    Json report;
    report["seed"] = cfg.seed;
    report["index"] = index;
    report["points"] = io::points_to_json(pts);
    report["verdicts"] = std::move(verdicts);
    report["stats"] = std::move(stats);
    out.report = std::move(report);
  }
  return out;
}

struct SearchOutcome {
  bool chordal = false;
  bool interval = false;
  bool triangle_free = false;
  bool reverified = false;
  std::optional<Json> hit;
};

SearchOutcome run_search_trial(const GeneratorConfig& cfg, std::uint64_t index) {
  SearchOutcome out;
  const std::vector<Point> pts = random_points(cfg, index);
  const Dpo d{PointSet(pts)};
  const UndirectedGraph g = niche_graph(d);
  out.chordal = is_chordal(g);
  const IntervalVerdict iv = check_interval(g);
  out.interval = iv.interval;
  const auto triangle = find_triangle(g);
  out.triangle_free = !triangle.has_value();
  if (!out.chordal || out.interval) return out;

  const bool hole_free = !find_hole(g).has_value();
  const auto at = find_asteroidal_triple(g);
  bool at_confirmed = at.has_value();
  if (g.size() <= kOracleLimit) at_confirmed = at_confirmed && oracle_find_at(g).has_value();
  out.reverified = hole_free && at_confirmed && triangle.has_value();

  Json hit;
  hit["kind"] = "hit";
  hit["seed"] = cfg.seed;
  hit["index"] = index;
  hit["points"] = io::points_to_json(d.vertices().points());
  hit["niche_edges"] = Json::array();
  for (const auto& [u, v] : g.edges()) hit["niche_edges"].push_back(Json::array({u, v}));
  hit["certificate"] = interval_failure(g, iv);
  if (triangle) hit["triangle"] = vertex_points(g, *triangle);
  hit["reverified"] = out.reverified;
  out.hit = std::move(hit);
  return out;
}

Json config_json(const GeneratorConfig& cfg) {
  Json j;
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["min_points"] = cfg.min_points;
  j["max_points"] = cfg.max_points;
  j["box"] = Json::array({cfg.box_lo, cfg.box_hi});
  j["thirds"] = cfg.third_offsets;
  return j;
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL) ^ (stream * 0xd6e8feb86659fd93ULL))) {}

std::int64_t TrialRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

std::vector<Point> random_points(const GeneratorConfig& cfg, std::uint64_t index) {
  TrialRng rng(cfg.seed, index, 0);
  const std::int64_t side = cfg.box_hi - cfg.box_lo + 1;
  const auto capacity = static_cast<std::size_t>(side > 0 ? side * side : 0);
  const std::size_t lo = std::min(cfg.min_points, cfg.max_points);
  const std::size_t want = std::min<std::size_t>(
      static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(cfg.max_points))),
      capacity);
  const bool thirds = cfg.third_offsets && rng.coin();
  const Rational box_lo(cfg.box_lo);
  const Rational box_hi(cfg.box_hi);

  auto coordinate = [&]() {
    Rational c(rng.uniform(cfg.box_lo, cfg.box_hi));
    if (thirds) {
      const Rational moved = c + Rational(rng.uniform(-1, 1), 3);
      if (moved >= box_lo && moved <= box_hi) c = moved;
    }
    return c;
  };
  std::set<Point> seen;
  std::vector<Point> out;
  while (out.size() < want) {
    Point p{coordinate(), coordinate()};
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

Dpo random_dpo(const GeneratorConfig& cfg, std::uint64_t index) { return Dpo(PointSet(random_points(cfg, index))); }

UndirectedGraph random_graph(std::uint64_t seed, std::uint64_t index, std::size_t max_vertices) {
  TrialRng rng(seed, index, 1);
  const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(std::max<std::size_t>(max_vertices, 1))));
  const std::int64_t density = rng.uniform(15, 85);
  UndirectedGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.uniform(0, 99) < density) g.add_edge(u, v);
    }
  }
  return g;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

bool is_layered(const PointSet& points, const Rational& c) {
  const Rational top = c + Rational(2);
  return std::all_of(points.begin(), points.end(), [&](const Point& p) {
    const Rational s = diagonal_sum(p);
    return is_lattice(p) ? (s == c || s == top) : (c < s && s < top);
  });
}

std::optional<Rational> infer_layering(const PointSet& points) {
  if (points.empty()) return Rational(0);
  std::vector<Rational> candidates;
  for (const Point& p : points) {
    if (is_lattice(p)) {
      candidates.push_back(diagonal_sum(p));
      candidates.push_back(diagonal_sum(p) - Rational(2));
    }
  }
  if (candidates.empty()) {
    for (const Point& p : points) candidates.push_back(diagonal_sum(p) - Rational(1));
  }
  std::sort(candidates.begin(), candidates.end());
  for (const Rational& c : candidates) {
    if (is_layered(points, c)) return c;
  }
  return std::nullopt;
}

LayeredFamily make_layered_family(PointSet points, Rational c) {
  if (!is_layered(points, c)) throw InvalidParameter("points are not layered at c = " + c.to_string());
  return LayeredFamily{std::move(points), c};
}

LayeredFamily random_layered_family(std::uint64_t seed, std::uint64_t index) {
  TrialRng rng(seed, index, 2);
  const std::int64_t c = rng.uniform(-3, 6);
  std::set<Point> pts;
  const std::int64_t lattice = rng.uniform(0, 8);
  for (std::int64_t i = 0; i < lattice; ++i) {
    const std::int64_t diag = rng.coin() ? c : c + 2;
    const std::int64_t x = rng.uniform(-3, 8);
    pts.insert({Rational(x), Rational(diag - x)});
  }
  const std::int64_t between = rng.uniform(0, 8);
  for (std::int64_t i = 0; i < between; ++i) {
    const Rational x(rng.uniform(-9, 27), 3);
    const Rational sum = Rational(c) + Rational(rng.uniform(1, 5), 3);
    const Point p{x, sum - x};
    if (!is_lattice(p)) pts.insert(p);
  }
  return make_layered_family(PointSet(std::vector<Point>(pts.begin(), pts.end())), Rational(c));
}

Verdict check_lemma_layered(const LayeredFamily& family) {
  if (!is_layered(family.points, family.c)) return Verdict::not_applicable("not layered");
  const Dpo d(family.points);
  const UndirectedGraph g = niche_graph(d);
  const Rational one(1);
  auto qualifies = [&](const Point& u, const Point& v) {
    return u.x1 <= v.x1 && (u.x1 + one != v.x1 || u.x2 - one != v.x2);
  };
  Json violations = Json::array();
  for (VertexId u = 0; u < d.size(); ++u) {
    if (!is_lattice(d.point(u))) continue;
    for (VertexId v = u + 1; v < d.size(); ++v) {
      if (!is_lattice(d.point(v))) continue;
      const bool covered = qualifies(d.point(u), d.point(v)) || qualifies(d.point(v), d.point(u));
      if (covered && g.adjacent(u, v)) {
        violations.push_back(Json::array({io::point_to_json(d.point(u)), io::point_to_json(d.point(v))}));
      }
    }
  }
  if (violations.empty()) return Verdict::pass();
  Json detail;
  detail["c"] = family.c.to_string();
  detail["adjacent_pairs"] = std::move(violations);
  return Verdict::fail(std::move(detail));
}

Verdict check_staircase_lemma(const Dpo& d, const UndirectedGraph& niche) {
  if (!is_triangle_free(niche)) return Verdict::not_applicable("niche graph has a triangle");
  Json violations = Json::array();
  for (VertexId y = 0; y < niche.size(); ++y) {
    for (VertexId x : niche.neighbors(y)) {
      for (VertexId z : niche.neighbors(y)) {
        if (x == z || d.point(x).x1 > d.point(z).x1) continue;
        if (!staircase(d.point(x), d.point(y)) || !staircase(d.point(y), d.point(z))) {
          const std::array<VertexId, 3> ids{x, y, z};
          violations.push_back(vertex_points(niche, ids));
        }
      }
    }
  }
  if (violations.empty()) return Verdict::pass();
  Json detail;
  detail["paths"] = std::move(violations);
  return Verdict::fail(std::move(detail));
}

Verdict check_staircase_lemma(const Dpo& d) { return check_staircase_lemma(d, niche_graph(d)); }

Verdict check_path_components(const Dpo& d, const UndirectedGraph& niche) {
  (void)d;
  if (const auto tri = find_triangle(niche)) {
    return Verdict::not_applicable("niche graph has a triangle");
  }
  Json detail;
  if (const auto violation = find_path_violation(niche)) {
    detail["reason"] = violation->reason == PathViolation::Reason::HighDegree ? "degree" : "cycle";
    detail["vertices"] = vertex_points(niche, violation->vertices);
  }
  const IntervalVerdict iv = check_interval(niche);
  if (!iv.interval) detail["not_interval"] = interval_failure(niche, iv);
  if (detail.is_null()) return Verdict::pass();
  return Verdict::fail(std::move(detail));
}

Verdict check_path_components(const Dpo& d) { return check_path_components(d, niche_graph(d)); }

Verdict check_competition_interval(const Dpo& d) {
  const UndirectedGraph g = competition_graph(d);
  const IntervalVerdict iv = check_interval(g);
  if (iv.interval) return Verdict::pass();
  return Verdict::fail(interval_failure(g, iv));
}

Verdict check_cce_interval(const Dpo& d) {
  const UndirectedGraph g = cce_graph(d);
  if (has_induced_c4(g)) return Verdict::not_applicable("cce graph has an induced 4-cycle");
  const IntervalVerdict iv = check_interval(g);
  if (iv.interval) return Verdict::pass();
  return Verdict::fail(interval_failure(g, iv));
}

Verdict check_identities(const Dpo& d) {
  Json broken = Json::array();
  std::array<UndirectedGraph, 4> graphs;
  for (std::size_t i = 0; i < kKinds.size(); ++i) {
    graphs[i] = derive_graph(d, kKinds[i], DeriveMethod::Staircase);
    if (!(graphs[i] == derive_graph(d, kKinds[i], DeriveMethod::Reference))) {
      broken.push_back("methods disagree on " + std::string(to_string(kKinds[i])));
    }
  }
  const auto& [competition, enemy, cce, niche] = graphs;
  for (VertexId u = 0; u < d.size(); ++u) {
    for (VertexId v = u + 1; v < d.size(); ++v) {
      if (niche.adjacent(u, v) != (competition.adjacent(u, v) || enemy.adjacent(u, v))) {
        broken.push_back("niche != competition | common-enemy");
      }
      if (cce.adjacent(u, v) != (competition.adjacent(u, v) && enemy.adjacent(u, v))) {
        broken.push_back("cce != competition & common-enemy");
      }
    }
  }

  const auto negate = [](const Point& p) { return -p; };
  const Dpo reflected = transformed(d, negate);
  if (labeled_edges(enemy, negate) != labeled_edges(competition_graph(reflected), identity)) {
    broken.push_back("common-enemy(V) is not competition(-V)");
  }
  if (labeled_edges(niche, negate) != labeled_edges(niche_graph(reflected), identity)) {
    broken.push_back("niche not invariant under reflection");
  }
  if (labeled_edges(cce, negate) != labeled_edges(cce_graph(reflected), identity)) {
    broken.push_back("cce not invariant under reflection");
  }

  const Point shift{Rational(7, 3), Rational(-5)};
  const std::array<std::pair<std::string, std::function<Point(const Point&)>>, 2> maps = {
      std::pair<std::string, std::function<Point(const Point&)>>{"translation",
                                                                 [&](const Point& p) { return p + shift; }},
      std::pair<std::string, std::function<Point(const Point&)>>{"axis swap",
                                                                 [](const Point& p) { return Point{p.x2, p.x1}; }}};
  for (const auto& [name, f] : maps) {
    const Dpo image = transformed(d, f);
    for (std::size_t i = 0; i < kKinds.size(); ++i) {
      if (labeled_edges(graphs[i], f) != labeled_edges(derive_graph(image, kKinds[i]), identity)) {
        broken.push_back(std::string(to_string(kKinds[i])) + " not invariant under " + name);
      }
    }
  }
  if (broken.empty()) return Verdict::pass();
  return Verdict::fail(std::move(broken));
}

bool oracle_is_chordal(const UndirectedGraph& g) {
  require_small(g);
  std::vector<bool> placed(g.size(), false);
  return extend_elimination(g, placed, 0);
}

std::optional<AsteroidalTriple> oracle_find_at(const UndirectedGraph& g) {
  require_small(g);
  const std::size_t n = g.size();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      for (VertexId w = v + 1; w < n; ++w) {
        if (g.adjacent(u, w) || g.adjacent(v, w)) continue;
        if (avoids(g, u, v, w) && avoids(g, u, w, v) && avoids(g, v, w, u)) return AsteroidalTriple{u, v, w};
      }
    }
  }
  return std::nullopt;
}

Verdict check_oracle_agreement(const UndirectedGraph& g) {
  if (g.size() > kOracleLimit) return Verdict::not_applicable("graph too large for the oracles");
  Json detail;
  if (is_chordal(g) != oracle_is_chordal(g)) detail["chordal"] = "disagrees with exhaustive search";
  if (find_asteroidal_triple(g).has_value() != oracle_find_at(g).has_value()) {
    detail["asteroidal_triple"] = "disagrees with path enumeration";
  }
  if (detail.is_null()) return Verdict::pass();
  return Verdict::fail(std::move(detail));
}

std::uint64_t SuiteResult::total_failures() const {
  std::uint64_t total = oracle_failures;
  for (const auto& c : counts) total += c.fail;
  return total;
}

Json SuiteResult::summary() const {
  Json j = config_json(config);
  Json checks;
  for (std::size_t i = 0; i < kSuiteChecks.size(); ++i) {
    Json c;
    c["pass"] = counts[i].pass;
    c["fail"] = counts[i].fail;
    c["not_applicable"] = counts[i].not_applicable;
    checks[std::string(kSuiteChecks[i])] = std::move(c);
  }
  j["checks"] = std::move(checks);
  j["oracle_agreement"] = Json{{"checked", oracle_checked}, {"fail", oracle_failures}};
  j["failing_trials"] = failures.size();
  j["failures"] = failures;
  return j;
}

SuiteResult run_suite(const GeneratorConfig& cfg, Execution exec) {
  std::vector<TrialOutcome> outcomes(cfg.trials);
  const auto trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(dynamic, 16) if (exec == Execution::Parallel)
  for (std::int64_t i = 0; i < trials; ++i) {
    outcomes[static_cast<std::size_t>(i)] = run_trial(cfg, static_cast<std::uint64_t>(i), false);
  }
  SuiteResult result;
  result.config = cfg;
  for (auto& o : outcomes) {
    for (std::size_t i = 0; i < o.status.size(); ++i) {
      auto& c = result.counts[i];
      switch (o.status[i]) {
        case Status::Pass: ++c.pass; break;
        case Status::Fail: ++c.fail; break;
        case Status::NotApplicable: ++c.not_applicable; break;
      }
    }
    result.oracle_checked += o.oracle_checked ? 1 : 0;
    result.oracle_failures += o.oracle_failed ? 1 : 0;
    if (o.report) result.failures.push_back(std::move(*o.report));
  }
  return result;
}

Json trial_report(const GeneratorConfig& cfg, std::uint64_t index) { return *run_trial(cfg, index, true).report; }

Json SearchResult::summary() const {
  Json j;
  j["kind"] = "summary";
  const Json cfg = config_json(config);
  for (auto& [key, value] : cfg.items()) j[key] = value;
  j["chordal"] = chordal;
  j["interval"] = interval;
  j["triangle_free"] = triangle_free;
  j["hits"] = hits.size();
  j["reverified_hits"] = reverified;
  return j;
}

SearchResult search_open_question(const GeneratorConfig& cfg, Execution exec) {
  std::vector<SearchOutcome> outcomes(cfg.trials);
  const auto trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(dynamic, 64) if (exec == Execution::Parallel)
  for (std::int64_t i = 0; i < trials; ++i) {
    outcomes[static_cast<std::size_t>(i)] = run_search_trial(cfg, static_cast<std::uint64_t>(i));
  }
  SearchResult result;
  result.config = cfg;
  for (auto& o : outcomes) {
    result.chordal += o.chordal ? 1 : 0;
    result.interval += o.interval ? 1 : 0;
    result.triangle_free += o.triangle_free ? 1 : 0;
    if (o.hit) {
      result.reverified += o.reverified ? 1 : 0;
      result.hits.push_back(std::move(*o.hit));
    }
  }
  return result;
}

std::optional<Json> search_trial(const GeneratorConfig& cfg, std::uint64_t index) {
  return run_search_trial(cfg, index).hit;
}

}  // namespace niche::harness
