#include "dkanon/cascade.hpp"

#include <algorithm>

#include "dkanon/parallel.hpp"

namespace dkanon {

std::size_t CascadeResult::identified_count() const {
  std::size_t total = 0;
  for (auto c : per_level_counts) total += c;
  return total;
}

double CascadeResult::uniqueness_through(std::size_t level) const {
  if (level_of.empty()) return 0.0;
  std::size_t total = 0;
  for (std::size_t l = 0; l < per_level_counts.size() && l <= level; ++l) total += per_level_counts[l];
  return static_cast<double>(total) / static_cast<double>(level_of.size());
}

std::vector<NodeId> CascadeResult::identified_nodes() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < level_of.size(); ++v) {
    if (level_of[v] != kNotIdentified) out.push_back(v);
  }
  return out;
}

namespace {

// Level-synchronous driver shared by both variants. `expand(u, out)` appends
// the nodes identified from frontier node u; duplicates are fine.
template <typename Expand>
CascadeResult run_levels(std::size_t n, std::vector<NodeId> seeds, std::size_t max_levels,
                         unsigned threads, Expand&& expand) {
  CascadeResult result;
  result.level_of.assign(n, kNotIdentified);
  for (NodeId s : seeds) result.level_of[s] = 0;
  result.per_level_counts.push_back(seeds.size());

  threads = resolve_threads(threads);
  std::vector<NodeId> frontier = std::move(seeds);
  std::vector<std::vector<NodeId>> found(threads);
  for (std::size_t level = 1; level <= max_levels && !frontier.empty(); ++level) {
    for (auto& f : found) f.clear();
    parallel_for(frontier.size(), threads, [&](std::size_t i, unsigned w) { expand(frontier[i], found[w]); });

    std::vector<NodeId> next;
    for (auto& f : found) {
      for (NodeId v : f) {
        if (result.level_of[v] == kNotIdentified) {
          result.level_of[v] = static_cast<std::int32_t>(level);
          next.push_back(v);
        }
      }
    }
    std::sort(next.begin(), next.end());
    result.per_level_counts.push_back(next.size());
    if (!next.empty()) result.max_level_reached = level;
    frontier = std::move(next);
  }
  return result;
}

// Neighbors of u grouped by class: sorted (class, node) pairs.
void neighbor_classes(const Graph& g, const EquivalencePartition& p1, NodeId u,
                      std::vector<std::pair<ClassId, NodeId>>& out) {
  out.clear();
  for (NodeId v : g.neighbors(u)) out.emplace_back(p1.class_of[v], v);
  std::sort(out.begin(), out.end());
}

}  // namespace

CascadeResult cascade(const Graph& g, const EquivalencePartition& p1, std::size_t max_levels,
                      const CascadeOptions& options) {
  auto expand = [&](NodeId u, std::vector<NodeId>& out) {
    thread_local std::vector<std::pair<ClassId, NodeId>> groups;
    neighbor_classes(g, p1, u, groups);
    for (std::size_t i = 0; i < groups.size();) {
      std::size_t j = i;
      while (j < groups.size() && groups[j].first == groups[i].first) ++j;
      if (j - i == 1) out.push_back(groups[i].second);
      i = j;
    }
  };
  return run_levels(g.node_count(), p1.unique_nodes(), max_levels, options.threads, expand);
}

double c1_uniqueness(const Graph& g, const EquivalencePartition& p1) {
  return cascade(g, p1, 1).uniqueness();
}

double c1_uniqueness(const Graph& g) { return c1_uniqueness(g, partition(g, 1)); }

CascadeResult twin_cascade(const Graph& g, const EquivalencePartition& p1, const TwinSets& twins,
                           std::size_t max_levels, const CascadeOptions& options) {
  auto expand = [&](NodeId u, std::vector<NodeId>& out) {
    thread_local std::vector<std::pair<ClassId, NodeId>> groups;
    neighbor_classes(g, p1, u, groups);
    for (std::size_t i = 0; i < groups.size();) {
      std::size_t j = i;
      while (j < groups.size() && groups[j].first == groups[i].first) ++j;
      const std::uint32_t set = twins.set_of[groups[i].second];
      bool all_twins = set != kNoTwinSet;
      for (std::size_t k = i + 1; k < j && all_twins; ++k) all_twins = twins.set_of[groups[k].second] == set;
      if (j - i == 1 || all_twins) {
        for (std::size_t k = i; k < j; ++k) out.push_back(groups[k].second);
      }
      i = j;
    }
  };
  return run_levels(g.node_count(), twin_unique_nodes(p1, twins), max_levels, options.threads, expand);
}

}  // namespace dkanon
