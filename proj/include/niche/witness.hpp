#pragma once

#include <array>
#include <string>
#include <vector>

#include "niche/dpo.hpp"
#include "niche/graph.hpp"
#include "niche/graphalg.hpp"

namespace niche {

enum class Parity { Even, Odd };

/// n = 2k (even) or n = 2k + 1 (odd), with n >= 4 and so k >= 2.
struct WitnessSpec {
  int n;
  int k;
  Parity parity;
};

/// Throws InvalidParameter for n < 4.
[[nodiscard]] WitnessSpec make_witness_spec(int n);

/// The diagonal triple {p - (1,1), p, p + (1,1)}. Throws NonLatticePoint
/// unless p has integer coordinates.
[[nodiscard]] std::array<Point, 3> x_triple(const Point& p);

/// The staircase block W_k, split into its integer and third-offset parts.
struct WSet {
  std::vector<Point> lattice;
  std::vector<Point> offsets;
};

/// lattice: (i, k-1-i) and (i+1, k-i) for i = 0..k-2.
/// offsets: (i - 1/3, k-i - 1/3) and (i + 1/3, k-i + 1/3) for i = 1..k-2.
/// Throws InvalidParameter for k < 2.
[[nodiscard]] WSet w_set(int k);

/// The 2k-1 vertices of W_k ∩ Z² plus (0,k), ordered along the induced path:
/// (k-2,1), (k-3,2), ..., (0,k-1), (0,k), (1,k), (2,k-1), ..., (k-1,2).
[[nodiscard]] std::vector<Point> a_sequence(int k);

struct WitnessBundle {
  WitnessSpec spec;
  PointSet points;                    ///< all 4k points
  std::vector<Point> cycle_sequence;  ///< the n points expected to induce C_n
  std::vector<Point> a_sequence;
  std::array<Point, 3> x_top;         ///< X around (0,k)
  std::array<Point, 3> x_bottom;      ///< X around (k-1,1) (even) or (k+1,1) (odd)
  std::vector<Point> w_lattice;
  std::vector<Point> w_offsets;
};

/// Throws InvalidParameter for n < 4.
[[nodiscard]] WitnessBundle witness_points(int n);

/// A checked witness: the digraph, its niche graph, and the induced cycle
/// with a prey/predator point on every edge.
struct CertifiedWitness {
  WitnessBundle bundle;
  Dpo dpo;
  UndirectedGraph niche;
  CycleCertificate certificate;
};

/// Builds, derives and verifies; throws CertificationFailure when the
/// declared cycle is not induced or an edge lacks a witness.
[[nodiscard]] CertifiedWitness certify_witness(int n);

/// One neighbourhood equation as listed in the construction's correctness
/// argument, compared against the computed graph.
struct NeighborhoodClaim {
  std::string graph;  ///< "N_n" (full witness) or "G_k" (X around (0,k) plus W_k)
  Point vertex;
  std::vector<Point> claimed;  ///< sorted
  std::vector<Point> actual;   ///< sorted

  [[nodiscard]] bool holds() const { return claimed == actual; }
};

/// Neighbourhoods of the X-block around the cycle's closing vertex in N_n
/// (three claims) and of (0,k) in G_k (one claim).
[[nodiscard]] std::vector<NeighborhoodClaim> neighborhood_claims(int n);

/// Neighbours of `p` in a labelled graph, as points, sorted.
[[nodiscard]] std::vector<Point> neighbor_points(const UndirectedGraph& g, const Point& p);

}  // namespace niche
