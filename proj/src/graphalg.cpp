#include "niche/graphalg.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <tuple>

#include "niche/errors.hpp"

namespace niche {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct FailedStep {
  VertexId vertex;
  VertexId first;
  VertexId second;
};

std::vector<std::size_t> positions(const UndirectedGraph& g, const EliminationOrder& order) {
  const std::size_t n = g.size();
  if (order.order.size() != n) throw InvalidSequence("order length differs from vertex count");
  std::vector<std::size_t> pos(n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = order.order[i];
    if (v >= n || pos[v] != kNone) throw InvalidSequence("order is not a permutation");
    pos[v] = i;
  }
  return pos;
}

// Parent test: with p the earliest later neighbour of v, every other later
// neighbour of v must be adjacent to p. Any miss is a non-clique witness.
std::optional<FailedStep> first_failed_step(const UndirectedGraph& g, const EliminationOrder& order) {
  const auto pos = positions(g, order);
  for (VertexId v : order.order) {
    VertexId parent = kNone;
    for (VertexId u : g.neighbors(v)) {
      if (pos[u] > pos[v] && (parent == kNone || pos[u] < pos[parent])) parent = u;
    }
    if (parent == kNone) continue;
    for (VertexId u : g.neighbors(v)) {
      if (pos[u] > pos[v] && u != parent && !g.adjacent(parent, u)) {
        return FailedStep{v, std::min(parent, u), std::max(parent, u)};
      }
    }
  }
  return std::nullopt;
}

// Chordless cycle v, a, ..., b through a shortest a-b path that avoids the
// closed neighbourhood of v except for a and b themselves.
std::optional<std::vector<VertexId>> hole_through(const UndirectedGraph& g, VertexId v, VertexId a, VertexId b) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n, kNone);
  std::deque<VertexId> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (VertexId y : g.neighbors(x)) {
      if (parent[y] != kNone || y == v) continue;
      if (g.adjacent(v, y) && y != b) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[b] == kNone) return std::nullopt;
  std::vector<VertexId> path;
  for (VertexId x = b; x != a; x = parent[x]) path.push_back(x);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  std::vector<VertexId> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

std::vector<int> components_without_closed_neighborhood(const UndirectedGraph& g, VertexId center) {
  const std::size_t n = g.size();
  std::vector<int> label(n, -1);
  std::vector<bool> removed(n, false);
  removed[center] = true;
  for (VertexId u : g.neighbors(center)) removed[u] = true;
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (removed[s] || label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (!removed[y] && label[y] == -1) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

std::optional<std::array<VertexId, 3>> find_triangle(const UndirectedGraph& g) {
  for (VertexId u = 0; u < g.size(); ++u) {
    const auto nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] < u) continue;
      for (std::size_t j = i + 1; j < nu.size(); ++j) {
        if (g.adjacent(nu[i], nu[j])) return std::array<VertexId, 3>{u, nu[i], nu[j]};
      }
    }
  }
  return std::nullopt;
}

std::vector<VertexId> neighborhood(const UndirectedGraph& g, VertexId v) {
  const auto nv = g.neighbors(v);
  return {nv.begin(), nv.end()};
}

EliminationOrder lexbfs_order(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<bool> visited(n, false);
  EliminationOrder out;
  out.order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = kNone;
    for (VertexId v = 0; v < n; ++v) {
      if (!visited[v] && (best == kNone || label[v] > label[best])) best = v;
    }
    visited[best] = true;
    out.order.push_back(best);
    for (VertexId u : g.neighbors(best)) {
      if (!visited[u]) label[u].push_back(n - step);
    }
  }
  return out;
}

bool is_perfect_elimination_order(const UndirectedGraph& g, const EliminationOrder& order) {
  return !first_failed_step(g, order).has_value();
}

std::optional<EliminationOrder> perfect_elimination_order(const UndirectedGraph& g) {
  EliminationOrder order = lexbfs_order(g);
  std::reverse(order.order.begin(), order.order.end());
  if (first_failed_step(g, order)) return std::nullopt;
  return order;
}

std::optional<CycleCertificate> find_hole(const UndirectedGraph& g) {
  EliminationOrder order = lexbfs_order(g);
  std::reverse(order.order.begin(), order.order.end());
  const auto failed = first_failed_step(g, order);
  if (!failed) return std::nullopt;

  auto accept = [&](std::vector<VertexId> cycle) -> std::optional<CycleCertificate> {
    if (!verify_induced_cycle(g, cycle)) {
      throw std::logic_error("extracted hole is not an induced cycle");
    }
    return CycleCertificate{std::move(cycle), {}};
  };
  if (auto cycle = hole_through(g, failed->vertex, failed->first, failed->second)) return accept(std::move(*cycle));

  // A graph with a hole always has a vertex with two non-adjacent
  // neighbours joined outside its closed neighbourhood: try them all.
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        if (g.adjacent(nv[i], nv[j])) continue;
        if (auto cycle = hole_through(g, v, nv[i], nv[j])) return accept(std::move(*cycle));
      }
    }
  }
  throw std::logic_error("graph failed the elimination test but no hole was found");
}

std::optional<AsteroidalTriple> find_asteroidal_triple(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<int>> comp(n);
  for (VertexId v = 0; v < n; ++v) comp[v] = components_without_closed_neighborhood(g, v);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      for (VertexId w = v + 1; w < n; ++w) {
        if (g.adjacent(u, w) || g.adjacent(v, w)) continue;
        if (comp[u][v] == comp[u][w] && comp[v][u] == comp[v][w] && comp[w][u] == comp[w][v]) {
          return AsteroidalTriple{u, v, w};
        }
      }
    }
  }
  return std::nullopt;
}

IntervalVerdict check_interval(const UndirectedGraph& g) {
  IntervalVerdict verdict;
  if (auto hole = find_hole(g)) {
    verdict.interval = false;
    verdict.hole = std::move(hole);
    return verdict;
  }
  if (auto at = find_asteroidal_triple(g)) {
    verdict.interval = false;
    verdict.asteroidal_triple = at;
  }
  return verdict;
}

std::vector<std::size_t> connected_components(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> label(n, kNone);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != kNone) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (label[y] == kNone) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

std::optional<PathViolation> find_path_violation(const UndirectedGraph& g) {
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto nv = g.neighbors(v);
    if (nv.size() >= 3) {
      return PathViolation{PathViolation::Reason::HighDegree, {v, nv[0], nv[1], nv[2]}};
    }
  }
  // Maximum degree is now at most 2, so a component is a path unless it
  // has as many edges as vertices.
  const auto label = connected_components(g);
  const std::size_t count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::size_t> vertices(count, 0);
  std::vector<std::size_t> degree_sum(count, 0);
  for (VertexId v = 0; v < g.size(); ++v) {
    ++vertices[label[v]];
    degree_sum[label[v]] += g.degree(v);
  }
  for (VertexId start = 0; start < g.size(); ++start) {
    const std::size_t c = label[start];
    if (degree_sum[c] / 2 < vertices[c] || g.degree(start) == 0) continue;
    std::vector<VertexId> cycle{start};
    VertexId prev = start;
    VertexId cur = g.neighbors(start)[0];
    while (cur != start) {
      cycle.push_back(cur);
      const auto nc = g.neighbors(cur);
      const VertexId next = nc[0] == prev ? nc[1] : nc[0];
      prev = cur;
      cur = next;
    }
    return PathViolation{PathViolation::Reason::Cycle, std::move(cycle)};
  }
  return std::nullopt;
}

bool verify_induced_cycle(const UndirectedGraph& g, std::span<const VertexId> seq) {
  const std::size_t len = seq.size();
  if (len < 3) throw InvalidSequence("a cycle needs at least three vertices");
  std::vector<VertexId> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidSequence("cycle repeats a vertex");
  }
  if (sorted.back() >= g.size()) throw UnknownVertex("cycle vertex out of range");
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(seq[i], seq[j]) != consecutive) return false;
    }
  }
  return true;
}

std::optional<std::array<VertexId, 4>> find_induced_c4(const UndirectedGraph& g) {
  // Every induced 4-cycle a-b-c-d has non-adjacent diagonals {a,c} and
  // {b,d}; scan non-adjacent pairs for two non-adjacent common neighbours.
  for (VertexId a = 0; a < g.size(); ++a) {
    for (VertexId c = a + 1; c < g.size(); ++c) {
      if (g.adjacent(a, c)) continue;
      std::vector<VertexId> common;
      std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(c).begin(),
                            g.neighbors(c).end(), std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (!g.adjacent(common[i], common[j])) return std::array<VertexId, 4>{a, common[i], c, common[j]};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace niche
