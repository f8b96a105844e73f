#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dkanon/graph.hpp"
#include "dkanon/models.hpp"

namespace dkanon::testing {

inline Graph make_graph(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  return make_graph(n, e);
}

/// Hub 0 with leaves 1..k.
inline Graph star(std::size_t k) {
  std::vector<Edge> e;
  for (NodeId i = 1; i <= k; ++i) e.emplace_back(0, i);
  return make_graph(k + 1, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

/// Star with a pendant: h=0; l1=1, l2=2, l3=3; p=4; edges h-l1, h-l2, h-l3, l3-p.
namespace sp {
inline constexpr NodeId h = 0, l1 = 1, l2 = 2, l3 = 3, p = 4;
}
inline Graph star_pendant() { return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}); }

/// Relabels nodes by `perm` (old id -> new id).
inline Graph permuted(const Graph& g, const std::vector<NodeId>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.node_count(), e);
}

inline std::vector<NodeId> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// G(n, p) keeping isolated nodes; for generic property tests.
inline Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return make_graph(n, e);
}

/// Mixed ER/BA/WS corpus instance, preprocessed. `degree` is an average
/// degree; BA uses m = max(1, round(degree / 2)) and WS the nearest even k.
inline Graph model_instance(ModelFamily family, std::size_t n, double degree, std::uint64_t seed) {
  ModelSpec spec{family, n, degree, 0.5, seed};
  if (family == ModelFamily::BA) spec.degree_param = std::max(1.0, std::round(degree / 2));
  if (family == ModelFamily::WS) spec.degree_param = std::max(2.0, 2 * std::round(degree / 2));
  return generate(spec).graph;
}

}  // namespace dkanon::testing
