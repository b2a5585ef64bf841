#include <doctest.h>

#include <algorithm>
#include <random>

#include "niche/dpo.hpp"
#include "niche/errors.hpp"
#include "niche/harness.hpp"
#include "oracles.hpp"

using niche::Dpo;
using niche::VertexId;
using oracle::pt;

namespace {

VertexId id(const Dpo& d, niche::Point p) { return *d.vertices().index_of(p); }

std::vector<VertexId> ids(const Dpo& d, std::initializer_list<niche::Point> pts) {
  std::vector<VertexId> out;
  for (const auto& p : pts) out.push_back(id(d, p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("build_dpo sorts and indexes") {
  const std::vector<niche::Point> pts{pt(2, 1), pt(0, 0), pt(1, 2)};
  const Dpo d = niche::build_dpo(pts);
  REQUIRE(d.size() == 3);
  CHECK(d.point(0) == pt(0, 0));
  CHECK(d.point(1) == pt(1, 2));
  CHECK(d.point(2) == pt(2, 1));
  // Arcs by brute-force dominance: (1,2)->(0,0) and (2,1)->(0,0) only.
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId v = 0; v < 3; ++v) {
    for (VertexId x = 0; x < 3; ++x) {
      if (oracle::prey(d.point(x), d.point(v))) arcs.emplace_back(v, x);
      CHECK(d.has_arc(v, x) == oracle::prey(d.point(x), d.point(v)));
    }
  }
  CHECK(arcs == std::vector<std::pair<VertexId, VertexId>>{{1, 0}, {2, 0}});
}

TEST_CASE("single vertex and duplicates") {
  const std::vector<niche::Point> one{pt(0, 0)};
  const Dpo d = niche::build_dpo(one);
  CHECK(d.prey_of(0).empty());
  CHECK(d.predators_of(0).empty());
  const std::vector<niche::Point> dup{pt(0, 0), pt(0, 0)};
  CHECK_THROWS_AS((void)niche::build_dpo(dup), niche::DuplicatePoint);
}

TEST_CASE("prey and predators") {
  const std::vector<niche::Point> pts{pt(0, 0), pt(1, 2), pt(2, 1)};
  const Dpo d = niche::build_dpo(pts);
  CHECK(d.prey_of(id(d, pt(1, 2))) == ids(d, {pt(0, 0)}));
  CHECK(d.prey_of(id(d, pt(0, 0))).empty());
  CHECK(d.prey_of(id(d, pt(2, 1))) == ids(d, {pt(0, 0)}));
  CHECK(d.predators_of(id(d, pt(0, 0))) == ids(d, {pt(1, 2), pt(2, 1)}));
  CHECK(d.predators_of(id(d, pt(1, 2))).empty());
  CHECK_THROWS_AS((void)d.prey_of(3), niche::UnknownVertex);

  const std::vector<niche::Point> chain{pt(0, 0), pt(1, 1), pt(2, 2)};
  const Dpo c = niche::build_dpo(chain);
  CHECK(c.predators_of(0) == std::vector<VertexId>{1, 2});
}

TEST_CASE("common prey and predator") {
  const std::vector<niche::Point> pts{pt(0, 0), pt(1, 2), pt(2, 1)};
  const Dpo d = niche::build_dpo(pts);
  const VertexId u = id(d, pt(1, 2));
  const VertexId v = id(d, pt(2, 1));
  CHECK(d.has_common_prey(u, v));
  CHECK(d.common_prey_witness(u, v) == id(d, pt(0, 0)));
  CHECK_FALSE(d.has_common_predator(u, v));

  const std::vector<niche::Point> two{pt(0, 0), pt(1, 1)};
  const Dpo e = niche::build_dpo(two);
  CHECK_FALSE(e.has_common_prey(0, 1));
  CHECK_FALSE(e.has_common_predator(0, 1));
  CHECK_THROWS_AS((void)e.has_common_prey(0, 5), niche::UnknownVertex);
  CHECK_THROWS_AS((void)e.has_common_prey(1, 1), std::invalid_argument);
}

TEST_CASE("equal coordinates are handled without general position") {
  // (0,1) and (0,2) share x1; nothing lies strictly left of x1 = 0.
  const std::vector<niche::Point> pts{pt(0, 1), pt(0, 2), pt(1, 3), pt(1, 0)};
  const Dpo d = niche::build_dpo(pts);
  CHECK_FALSE(d.has_common_prey(id(d, pt(0, 1)), id(d, pt(0, 2))));
  CHECK(d.has_common_predator(id(d, pt(0, 1)), id(d, pt(0, 2))));
  CHECK_FALSE(d.any_strictly_below(pt(1, 1)));
  CHECK(d.any_strictly_above(pt(0, 2)));
  CHECK_FALSE(d.any_strictly_above(pt(1, 0)));
}

TEST_CASE("dpo properties on random sets") {
  niche::harness::GeneratorConfig cfg;
  cfg.seed = 11;
  cfg.max_points = 10;
  std::mt19937_64 shuffle_rng(3);
  for (std::uint64_t i = 0; i < 400; ++i) {
    auto pts = niche::harness::random_points(cfg, i);
    const Dpo d = niche::build_dpo(pts);
    const std::size_t n = d.size();
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId x = 0; x < n; ++x) {
        for (VertexId w = 0; w < n; ++w) {
          if (d.has_arc(v, x) && d.has_arc(x, w)) CHECK(d.has_arc(v, w));
        }
      }
      CHECK_FALSE(d.has_arc(v, v));
    }
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        std::vector<VertexId> common;
        std::set_intersection(d.prey_of(u).begin(), d.prey_of(u).end(), d.prey_of(v).begin(), d.prey_of(v).end(),
                              std::back_inserter(common));
        CHECK(d.has_common_prey(u, v) == !common.empty());
        CHECK(d.has_common_prey(u, v) == d.common_prey_witness(u, v).has_value());
        common.clear();
        std::set_intersection(d.predators_of(u).begin(), d.predators_of(u).end(), d.predators_of(v).begin(),
                              d.predators_of(v).end(), std::back_inserter(common));
        CHECK(d.has_common_predator(u, v) == !common.empty());
      }
    }
    // Ids do not depend on input order.
    std::shuffle(pts.begin(), pts.end(), shuffle_rng);
    const Dpo e = niche::build_dpo(pts);
    CHECK(std::equal(d.vertices().begin(), d.vertices().end(), e.vertices().begin(), e.vertices().end()));
  }
}
