#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dkanon {

/// Dense node index in 0..n-1.
using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph in compressed row layout.
///
/// Neighbor lists are sorted ascending and contain neither self-loops nor
/// duplicates. An optional label table maps dense indices back to the labels
/// seen at load time; graphs built directly (views, generators) may carry
/// no labels, in which case the index doubles as the label.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `node_count` nodes. Edges may come in either
  /// orientation and may repeat; repeats are merged. Self-loops and
  /// out-of-range endpoints throw std::invalid_argument. Nodes without
  /// edges are kept.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  /// Throws std::out_of_range for an invalid node.
  std::size_t degree(NodeId v) const {
    check(v);
    return offsets_[v + 1] - offsets_[v];
  }

  std::span<const NodeId> neighbors(NodeId v) const {
    check(v);
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  /// Binary search in the sorted neighbor list of `u`.
  bool has_edge(NodeId u, NodeId v) const;

  /// Original label of `v`; the decimal index if the graph has no labels.
  std::string label(NodeId v) const;
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  void check(NodeId v) const {
    if (v >= node_count()) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
  }

  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::vector<std::string> labels_;
};

struct LoadReport {
  std::size_t nodes_kept = 0;
  std::size_t nodes_dropped_isolated = 0;
  std::size_t self_loops_removed = 0;
  std::size_t duplicate_edges_merged = 0;
  /// Edges that appeared in both orientations (u v and v u); a subset of
  /// duplicate_edges_merged.
  std::size_t direction_collapsed = 0;
  /// Nodes removed by the opt-in giant component filter.
  std::size_t nodes_dropped_outside_giant = 0;

  friend bool operator==(const LoadReport&, const LoadReport&) = default;
};

struct LoadOptions {
  /// Keep only the largest connected component after preprocessing.
  bool giant_component = false;
};

struct LoadResult {
  Graph graph;
  LoadReport report;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyGraphError : public std::runtime_error {
 public:
  EmptyGraphError() : std::runtime_error("empty graph after preprocessing") {}
};

/// Reads a whitespace-separated edge list. Lines starting with '#' or '%'
/// are comments; columns after the first two are ignored. Self-loops and
/// duplicate edges are removed, nodes left without edges are dropped, and
/// dense indices follow first appearance.
LoadResult load_edge_list(std::istream& in, const LoadOptions& options = {});
LoadResult load_edge_list_file(const std::string& path, const LoadOptions& options = {});

/// Applies the load preprocessing rules to an edge list over `node_count`
/// nodes. Surviving nodes keep their relative order.
LoadResult preprocess_edges(std::size_t node_count, std::span<const Edge> raw,
                            std::vector<std::string> labels = {},
                            const LoadOptions& options = {});

/// One "u v" line per edge, u < v by dense index, sorted, LF terminated.
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

/// Connected component id per node; ids ordered by smallest member.
std::vector<std::uint32_t> connected_components(const Graph& g);

/// Induced subgraph on the largest connected component (ties: the
/// component containing the smallest node). Labels are carried over.
Graph largest_component(const Graph& g);

/// Induced subgraph on `nodes` (in the given order). Labels are carried over.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

}  // namespace dkanon
