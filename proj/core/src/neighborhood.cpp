#include "dkanon/neighborhood.hpp"

#include <stdexcept>

namespace dkanon {

namespace {
constexpr auto kAbsent = static_cast<NodeId>(-1);
}

NeighborhoodExtractor::NeighborhoodExtractor(const Graph& g)
    : graph_(&g), local_(g.node_count(), kAbsent) {}

NeighborhoodView NeighborhoodExtractor::extract(NodeId v, std::size_t radius) {
  if (radius < 1) throw std::invalid_argument("neighborhood radius must be >= 1");
  const Graph& g = *graph_;
  if (v >= g.node_count()) throw std::out_of_range("node id out of range");

  order_.clear();
  order_.push_back(v);
  local_[v] = 0;
  std::size_t level_begin = 0;
  for (std::size_t depth = 0; depth < radius; ++depth) {
    const std::size_t level_end = order_.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (NodeId w : g.neighbors(order_[i])) {
        if (local_[w] == kAbsent) {
          local_[w] = static_cast<NodeId>(order_.size());
          order_.push_back(w);
        }
      }
    }
    level_begin = level_end;
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    for (NodeId w : g.neighbors(order_[i])) {
      NodeId j = local_[w];
      if (j != kAbsent && i < j) edges.emplace_back(static_cast<NodeId>(i), j);
    }
  }

  NeighborhoodView view;
  view.local_graph = Graph::from_edges(order_.size(), edges);
  view.focal = 0;
  view.local_to_global = order_;
  view.radius = radius;
  for (NodeId w : order_) local_[w] = kAbsent;
  return view;
}

NeighborhoodView closed_neighborhood(const Graph& g, NodeId v, std::size_t radius) {
  NeighborhoodExtractor extractor(g);
  return extractor.extract(v, radius);
}

std::vector<NodeId> open_neighbor_set(const Graph& g, NodeId v) {
  auto row = g.neighbors(v);
  return {row.begin(), row.end()};
}

std::vector<NodeId> closed_neighbor_set(const Graph& g, NodeId v) {
  auto row = g.neighbors(v);
  std::vector<NodeId> out;
  out.reserve(row.size() + 1);
  bool placed = false;
  for (NodeId w : row) {
    if (!placed && v < w) {
      out.push_back(v);
      placed = true;
    }
    out.push_back(w);
  }
  if (!placed) out.push_back(v);
  return out;
}

}  // namespace dkanon
