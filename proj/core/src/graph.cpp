#include "dkanon/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace dkanon {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count) {
    throw std::invalid_argument("label table size does not match node count");
  }
  std::vector<std::uint64_t> degree(node_count + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  std::vector<NodeId> raw(g.offsets_.back());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    raw[cursor[u]++] = v;
    raw[cursor[v]++] = u;
  }

  // Sort and deduplicate each row, compacting in place.
  std::uint64_t write = 0;
  std::uint64_t row_begin = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    const std::uint64_t row_end = g.offsets_[v + 1];
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(row_begin);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(row_end);
    std::sort(first, last);
    last = std::unique(first, last);
    g.offsets_[v] = write;
    for (auto it = first; it != last; ++it) raw[write++] = *it;
    row_begin = row_end;
  }
  g.offsets_[node_count] = write;
  raw.resize(write);
  raw.shrink_to_fit();
  g.neighbors_ = std::move(raw);
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::string Graph::label(NodeId v) const {
  check(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

LoadResult preprocess_edges(std::size_t node_count, std::span<const Edge> raw,
                            std::vector<std::string> labels, const LoadOptions& options) {
  LoadReport report;

  // Normalised edge plus whether it arrived reversed.
  struct Oriented {
    NodeId u, v;
    bool reversed;
  };
  std::vector<Oriented> oriented;
  oriented.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (a >= node_count || b >= node_count) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) {
      ++report.self_loops_removed;
      continue;
    }
    oriented.push_back(a < b ? Oriented{a, b, false} : Oriented{b, a, true});
  }
  std::sort(oriented.begin(), oriented.end(), [](const Oriented& x, const Oriented& y) {
    return std::tie(x.u, x.v, x.reversed) < std::tie(y.u, y.v, y.reversed);
  });

  std::vector<Edge> unique_edges;
  unique_edges.reserve(oriented.size());
  for (std::size_t i = 0; i < oriented.size();) {
    std::size_t j = i;
    while (j < oriented.size() && oriented[j].u == oriented[i].u && oriented[j].v == oriented[i].v) ++j;
    unique_edges.emplace_back(oriented[i].u, oriented[i].v);
    report.duplicate_edges_merged += j - i - 1;
    // Sorted by orientation flag, so both orientations present iff the run
    // starts forward and ends reversed.
    if (!oriented[i].reversed && oriented[j - 1].reversed) ++report.direction_collapsed;
    i = j;
  }

  std::vector<char> touched(node_count, 0);
  for (auto [u, v] : unique_edges) touched[u] = touched[v] = 1;
  std::vector<NodeId> remap(node_count, 0);
  std::vector<std::string> kept_labels;
  NodeId next = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    if (touched[v]) {
      remap[v] = next++;
      if (!labels.empty()) kept_labels.push_back(std::move(labels[v]));
    } else {
      ++report.nodes_dropped_isolated;
    }
  }
  for (auto& [u, v] : unique_edges) {
    u = remap[u];
    v = remap[v];
  }
  if (next == 0) throw EmptyGraphError();

  LoadResult result{Graph::from_edges(next, unique_edges, std::move(kept_labels)), report};
  if (options.giant_component) {
    Graph giant = largest_component(result.graph);
    result.report.nodes_dropped_outside_giant = result.graph.node_count() - giant.node_count();
    result.graph = std::move(giant);
  }
  result.report.nodes_kept = result.graph.node_count();
  return result;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits off the next whitespace-delimited token; empty when exhausted.
std::string_view next_token(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && is_space(rest[i])) ++i;
  std::size_t j = i;
  while (j < rest.size() && !is_space(rest[j])) ++j;
  std::string_view token = rest.substr(i, j - i);
  rest.remove_prefix(j);
  return token;
}

}  // namespace

LoadResult load_edge_list(std::istream& in, const LoadOptions& options) {
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  auto intern = [&](std::string_view label) {
    auto [it, inserted] = index.try_emplace(std::string(label), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    std::string_view first = next_token(rest);
    if (first.empty()) continue;
    if (first.front() == '#' || first.front() == '%') continue;
    std::string_view second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected two node labels");
    NodeId u = intern(first);
    NodeId v = intern(second);
    edges.emplace_back(u, v);
  }
  if (labels.empty()) throw EmptyGraphError();
  const std::size_t n = labels.size();
  return preprocess_edges(n, edges, std::move(labels), options);
}

LoadResult load_edge_list_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(g.node_count(), kUnset);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

Graph largest_component(const Graph& g) {
  auto comp = connected_components(g);
  std::vector<std::size_t> sizes;
  for (auto c : comp) {
    if (c >= sizes.size()) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  if (sizes.empty()) return g;
  auto best = static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> keep;
  keep.reserve(sizes[best]);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comp[v] == best) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr auto kAbsent = static_cast<NodeId>(-1);
  std::vector<NodeId> local(g.node_count(), kAbsent);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (NodeId w : g.neighbors(nodes[i])) {
      NodeId j = local[w];
      if (j != kAbsent && i < j) edges.emplace_back(static_cast<NodeId>(i), j);
    }
    if (g.has_labels()) labels.push_back(g.labels()[nodes[i]]);
  }
  return Graph::from_edges(nodes.size(), edges, std::move(labels));
}

}  // namespace dkanon
