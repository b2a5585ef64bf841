#include <doctest.h>

#include <algorithm>

#include "niche/errors.hpp"
#include "niche/graphalg.hpp"
#include "niche/harness.hpp"
#include "oracles.hpp"

using niche::UndirectedGraph;
using niche::VertexId;

TEST_CASE("triangle freeness") {
  CHECK(niche::is_triangle_free(oracle::cycle(4)));
  CHECK_FALSE(niche::is_triangle_free(oracle::complete(3)));
  CHECK(niche::is_triangle_free(UndirectedGraph(5)));
  CHECK(niche::find_triangle(oracle::complete(3)) == std::array<VertexId, 3>{0, 1, 2});
}

TEST_CASE("neighborhood") {
  CHECK(niche::neighborhood(oracle::path(3), 1) == std::vector<VertexId>{0, 2});
  CHECK(niche::neighborhood(UndirectedGraph(2), 0).empty());
  CHECK(niche::neighborhood(oracle::complete(3), 2) == std::vector<VertexId>{0, 1});
  CHECK_THROWS_AS((void)niche::neighborhood(oracle::path(3), 3), niche::UnknownVertex);
}

TEST_CASE("lex-bfs order") {
  CHECK(niche::lexbfs_order(UndirectedGraph(4)).order == std::vector<VertexId>{0, 1, 2, 3});
  const auto k4 = oracle::complete(4);
  CHECK(niche::lexbfs_order(k4) == niche::lexbfs_order(k4));
  CHECK(niche::is_perfect_elimination_order(k4, niche::lexbfs_order(k4)));
  const auto p3 = oracle::path(3);
  auto order = niche::lexbfs_order(p3);
  CHECK(order.order == std::vector<VertexId>{0, 1, 2});
  std::reverse(order.order.begin(), order.order.end());
  CHECK(niche::is_perfect_elimination_order(p3, order));
  CHECK_THROWS_AS((void)niche::is_perfect_elimination_order(p3, niche::EliminationOrder{{0, 0, 1}}),
                  niche::InvalidSequence);
}

TEST_CASE("chordality") {
  CHECK_FALSE(niche::is_chordal(oracle::cycle(4)));
  CHECK_FALSE(niche::is_chordal(oracle::cycle(5)));
  CHECK(niche::is_chordal(oracle::subdivided_claw()));
  CHECK(niche::is_chordal(oracle::complete(5)));
  const auto peo = niche::perfect_elimination_order(oracle::subdivided_claw());
  REQUIRE(peo);
  CHECK(niche::is_perfect_elimination_order(oracle::subdivided_claw(), *peo));
}

TEST_CASE("find_hole") {
  const auto c4 = niche::find_hole(oracle::cycle(4));
  REQUIRE(c4);
  CHECK(c4->cycle.size() == 4);
  CHECK(niche::verify_induced_cycle(oracle::cycle(4), c4->cycle));
  CHECK_FALSE(niche::find_hole(oracle::subdivided_claw()));

  // C_6 plus chord 0-2: induced cycles are the triangle and a 5-cycle.
  auto g = oracle::cycle(6);
  g.add_edge(0, 2);
  CHECK(oracle::induced_cycle_lengths(g) == std::set<std::size_t>{3, 5});
  const auto hole = niche::find_hole(g);
  REQUIRE(hole);
  CHECK(hole->cycle.size() == 5);
  CHECK(niche::verify_induced_cycle(g, hole->cycle));
}

TEST_CASE("asteroidal triples") {
  CHECK(niche::find_asteroidal_triple(oracle::subdivided_claw()) == niche::AsteroidalTriple{2, 4, 6});
  CHECK_FALSE(niche::find_asteroidal_triple(oracle::path(7)));
  // Alternating vertices of C_6, confirmed by exhaustive path enumeration.
  CHECK(niche::harness::oracle_find_at(oracle::cycle(6)) == niche::AsteroidalTriple{0, 2, 4});
  CHECK(niche::find_asteroidal_triple(oracle::cycle(6)) == niche::AsteroidalTriple{0, 2, 4});
}

TEST_CASE("interval recognition") {
  CHECK(niche::is_interval(oracle::path(4)));
  const auto c4 = niche::check_interval(oracle::cycle(4));
  CHECK_FALSE(c4.interval);
  REQUIRE(c4.hole);
  CHECK(c4.hole->cycle.size() == 4);
  const auto claw = niche::check_interval(oracle::subdivided_claw());
  CHECK_FALSE(claw.interval);
  CHECK_FALSE(claw.hole);
  CHECK(claw.asteroidal_triple);
}

TEST_CASE("path components") {
  auto g = UndirectedGraph(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(niche::components_are_paths(g));
  const auto star = oracle::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto star_v = niche::find_path_violation(star);
  REQUIRE(star_v);
  CHECK(star_v->reason == niche::PathViolation::Reason::HighDegree);
  const auto c4 = niche::find_path_violation(oracle::cycle(4));
  REQUIRE(c4);
  CHECK(c4->reason == niche::PathViolation::Reason::Cycle);
  CHECK(c4->vertices.size() == 4);
  CHECK(niche::components_are_paths(UndirectedGraph(0)));
}

TEST_CASE("verify_induced_cycle") {
  const std::vector<VertexId> natural{0, 1, 2, 3};
  CHECK(niche::verify_induced_cycle(oracle::cycle(4), natural));
  const std::vector<VertexId> swapped{0, 2, 1, 3};
  CHECK_FALSE(niche::verify_induced_cycle(oracle::cycle(4), swapped));
  CHECK_FALSE(niche::verify_induced_cycle(oracle::complete(4), natural));
  const std::vector<VertexId> short_seq{0, 1};
  CHECK_THROWS_AS((void)niche::verify_induced_cycle(oracle::cycle(4), short_seq), niche::InvalidSequence);
  const std::vector<VertexId> repeat{0, 1, 0};
  CHECK_THROWS_AS((void)niche::verify_induced_cycle(oracle::cycle(4), repeat), niche::InvalidSequence);
}

TEST_CASE("induced C4") {
  CHECK(niche::has_induced_c4(oracle::cycle(4)));
  CHECK_FALSE(niche::has_induced_c4(oracle::cycle(5)));
  const auto k22 = oracle::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const auto c4 = niche::find_induced_c4(k22);
  REQUIRE(c4);
  CHECK(niche::verify_induced_cycle(k22, std::vector<VertexId>(c4->begin(), c4->end())));
}

TEST_CASE("graph invariants on random graphs") {
  for (std::uint64_t i = 0; i < 600; ++i) {
    const auto g = niche::harness::random_graph(21, i, 9);
    const bool chordal = niche::is_chordal(g);
    const auto hole = niche::find_hole(g);
    CHECK(chordal == !hole.has_value());
    const auto lengths = oracle::induced_cycle_lengths(g);
    const bool has_long = std::any_of(lengths.begin(), lengths.end(), [](std::size_t l) { return l >= 4; });
    CHECK(chordal == !has_long);
    if (hole) CHECK(niche::verify_induced_cycle(g, hole->cycle));
    CHECK(niche::has_induced_c4(g) == (lengths.count(4) != 0));
    if (niche::components_are_paths(g)) CHECK(niche::is_interval(g));
    CHECK(niche::lexbfs_order(g) == niche::lexbfs_order(g));
    const auto v = niche::check_interval(g);
    CHECK(v.interval == (chordal && !niche::find_asteroidal_triple(g)));
  }
}
