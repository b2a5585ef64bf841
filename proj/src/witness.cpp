#include "niche/witness.hpp"

#include <algorithm>
#include <string>

#include "niche/derive.hpp"
#include "niche/errors.hpp"

namespace niche {
namespace {

Point pt(std::int64_t a, std::int64_t b) { return {Rational(a), Rational(b)}; }

const Rational kThird(1, 3);

void require_k(int k) {
  if (k < 2) throw InvalidParameter("k must be at least 2, got " + std::to_string(k));
}

std::vector<Point> sorted(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

WitnessSpec make_witness_spec(int n) {
  if (n < 4) throw InvalidParameter("n must be at least 4, got " + std::to_string(n));
  return WitnessSpec{n, n / 2, n % 2 == 0 ? Parity::Even : Parity::Odd};
}

std::array<Point, 3> x_triple(const Point& p) {
  if (!is_lattice(p)) throw NonLatticePoint("not a lattice point: " + p.to_string());
  const Point step{Rational(1), Rational(1)};
  return {p + -step, p, p + step};
}

WSet w_set(int k) {
  require_k(k);
  WSet w;
  for (int i = 0; i <= k - 2; ++i) {
    w.lattice.push_back(pt(i, k - 1 - i));
    w.lattice.push_back(pt(i + 1, k - i));
  }
  for (int i = 1; i <= k - 2; ++i) {
    w.offsets.push_back({Rational(i) - kThird, Rational(k - i) - kThird});
    w.offsets.push_back({Rational(i) + kThird, Rational(k - i) + kThird});
  }
  return w;
}

std::vector<Point> a_sequence(int k) {
  require_k(k);
  std::vector<Point> seq;
  for (int i = k - 2; i >= 0; --i) seq.push_back(pt(i, k - 1 - i));
  seq.push_back(pt(0, k));
  for (int i = 0; i <= k - 2; ++i) seq.push_back(pt(i + 1, k - i));
  return seq;
}

WitnessBundle witness_points(int n) {
  const WitnessSpec spec = make_witness_spec(n);
  const int k = spec.k;
  const bool even = spec.parity == Parity::Even;
  WSet w = w_set(k);
  const auto x_top = x_triple(pt(0, k));
  const auto x_bottom = x_triple(even ? pt(k - 1, 1) : pt(k + 1, 1));

  std::vector<Point> all(w.lattice.begin(), w.lattice.end());
  all.insert(all.end(), w.offsets.begin(), w.offsets.end());
  all.insert(all.end(), x_top.begin(), x_top.end());
  all.insert(all.end(), x_bottom.begin(), x_bottom.end());

  auto seq = a_sequence(k);
  std::vector<Point> cycle = seq;
  if (even) {
    cycle.push_back(pt(k - 1, 1));
  } else {
    cycle.push_back(pt(k + 2, 2));
    cycle.push_back(pt(k + 1, 1));
  }
  return WitnessBundle{spec,
                       PointSet(std::move(all)),
                       std::move(cycle),
                       std::move(seq),
                       x_top,
                       x_bottom,
                       std::move(w.lattice),
                       std::move(w.offsets)};
}

CertifiedWitness certify_witness(int n) {
  WitnessBundle bundle = witness_points(n);
  Dpo dpo(bundle.points);
  UndirectedGraph g = niche_graph(dpo);

  std::vector<VertexId> ids;
  ids.reserve(bundle.cycle_sequence.size());
  for (const Point& p : bundle.cycle_sequence) {
    const auto id = dpo.vertices().index_of(p);
    if (!id) throw CertificationFailure("cycle point " + p.to_string() + " is not a vertex");
    ids.push_back(*id);
  }
  if (ids.size() != static_cast<std::size_t>(n) || !verify_induced_cycle(g, ids)) {
    throw CertificationFailure("sequence for n=" + std::to_string(n) + " does not induce C_n");
  }
  CycleCertificate cert{ids, {}};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const VertexId u = ids[i];
    const VertexId v = ids[(i + 1) % ids.size()];
    auto wit = find_edge_witness(dpo, u, v);
    if (!wit) {
      throw CertificationFailure("edge " + dpo.point(u).to_string() + "-" + dpo.point(v).to_string() +
                                 " has no witness");
    }
    cert.witnesses.push_back(*wit);
  }
  return CertifiedWitness{std::move(bundle), std::move(dpo), std::move(g), std::move(cert)};
}

std::vector<Point> neighbor_points(const UndirectedGraph& g, const Point& p) {
  const auto labels = g.labels();
  const auto it = std::lower_bound(labels.begin(), labels.end(), p);
  if (it == labels.end() || *it != p) throw UnknownVertex("no vertex at " + p.to_string());
  std::vector<Point> out;
  for (VertexId u : g.neighbors(static_cast<VertexId>(it - labels.begin()))) out.push_back(labels[u]);
  return sorted(std::move(out));
}

std::vector<NeighborhoodClaim> neighborhood_claims(int n) {
  const WitnessSpec spec = make_witness_spec(n);
  const int k = spec.k;
  const WitnessBundle bundle = witness_points(n);
  const UndirectedGraph full = niche_graph(Dpo(bundle.points));

  std::vector<NeighborhoodClaim> claims;
  auto add = [&](const std::string& name, const UndirectedGraph& g, Point v, std::vector<Point> expected) {
    claims.push_back({name, v, sorted(std::move(expected)), neighbor_points(g, v)});
  };
  if (spec.parity == Parity::Even) {
    add("N_n", full, pt(k - 2, 0), {pt(k - 1, 1), pt(k, 2), pt(k - 1, 2)});
    add("N_n", full, pt(k, 2), {pt(k - 1, 1), pt(k - 2, 0), pt(k - 2, 1)});
    add("N_n", full, pt(k - 1, 1), {pt(k - 2, 0), pt(k, 2), pt(k - 2, 1), pt(k - 1, 2)});
  } else {
    add("N_n", full, pt(k, 0), {pt(k + 1, 1), pt(k - 2, 1)});
    add("N_n", full, pt(k + 1, 1), {pt(k, 0), pt(k + 2, 2), pt(k - 2, 1)});
    add("N_n", full, pt(k + 2, 2), {pt(k + 1, 1), pt(k - 1, 2)});
  }
  std::vector<Point> top(bundle.w_lattice.begin(), bundle.w_lattice.end());
  top.insert(top.end(), bundle.w_offsets.begin(), bundle.w_offsets.end());
  top.insert(top.end(), bundle.x_top.begin(), bundle.x_top.end());
  const UndirectedGraph gk = niche_graph(Dpo(PointSet(std::move(top))));
  add("G_k", gk, pt(0, k), {pt(1, k), pt(0, k - 1), pt(-1, k - 1), pt(1, k + 1)});
  return claims;
}

}  // namespace niche
