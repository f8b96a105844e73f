#pragma once

#include <cstddef>
#include <vector>

#include "dkanon/graph.hpp"

namespace dkanon {

/// Induced subgraph of all nodes within `radius` hops of a focal node.
///
/// Local ids follow BFS visit order from the focal node, expanding
/// neighbors in ascending global id, so the focal node is always local 0.
struct NeighborhoodView {
  Graph local_graph;
  NodeId focal = 0;
  std::vector<NodeId> local_to_global;
  std::size_t radius = 0;

  std::size_t size() const { return local_graph.node_count(); }
};

/// Requires radius >= 1; throws std::invalid_argument otherwise.
NeighborhoodView closed_neighborhood(const Graph& g, NodeId v, std::size_t radius);

/// Neighbors of `v`, sorted, excluding `v`.
std::vector<NodeId> open_neighbor_set(const Graph& g, NodeId v);

/// Neighbors of `v` plus `v` itself, sorted.
std::vector<NodeId> closed_neighbor_set(const Graph& g, NodeId v);

/// Reusable scratch space for repeated extraction on the same graph.
///
/// Not thread-safe; give each worker its own extractor.
class NeighborhoodExtractor {
 public:
  explicit NeighborhoodExtractor(const Graph& g);

  NeighborhoodView extract(NodeId v, std::size_t radius);

 private:
  const Graph* graph_;
  std::vector<NodeId> local_;  // global -> local, kAbsent when not visited
  std::vector<NodeId> order_;
};

}  // namespace dkanon
