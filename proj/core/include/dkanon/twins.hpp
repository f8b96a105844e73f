#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dkanon/equivalence.hpp"
#include "dkanon/graph.hpp"

namespace dkanon {

inline constexpr std::uint32_t kNoTwinSet = static_cast<std::uint32_t>(-1);

/// Maximal sets of open twins (identical open neighborhoods, pairwise
/// non-adjacent) and closed twins (identical closed neighborhoods, pairwise
/// adjacent). A node lies in at most one set of either kind.
struct TwinSets {
  std::vector<std::vector<NodeId>> open_sets;
  std::vector<std::vector<NodeId>> closed_sets;
  /// Per node: index into open_sets, then closed_sets (offset by
  /// open_sets.size()), or kNoTwinSet.
  std::vector<std::uint32_t> set_of;
  double twin_fraction = 0.0;

  std::size_t set_count() const { return open_sets.size() + closed_sets.size(); }
  const std::vector<NodeId>& set(std::uint32_t index) const {
    return index < open_sets.size() ? open_sets[index] : closed_sets[index - open_sets.size()];
  }
  bool are_twins(NodeId a, NodeId b) const {
    return a != b && set_of[a] != kNoTwinSet && set_of[a] == set_of[b];
  }
};

/// Groups nodes by hashed sorted open and closed neighbor lists, verifying
/// every hash match exactly. Sets and their members are sorted ascending.
TwinSets find_twins(const Graph& g, unsigned threads = 1);

/// One representative per twin set (its smallest member) plus every node
/// outside twin sets.
struct TwinReduction {
  std::vector<NodeId> representatives;  // ascending
  std::vector<NodeId> representative_of;  // per node; itself for representatives
};

TwinReduction twin_reduce(const Graph& g, const TwinSets& twins);

/// Extends per-representative labels (aligned with `representatives`) to
/// every node by copying the representative's label.
std::vector<std::uint64_t> expand_labels(const TwinReduction& reduction,
                                         std::span<const std::uint64_t> representative_labels);

/// Partition over all nodes from a partition computed on the representatives
/// only (node i of `reduced` is representatives[i]).
EquivalencePartition expand_partition(const TwinReduction& reduction, const EquivalencePartition& reduced);

/// Nodes that are unique, or whose whole class lies inside one twin set.
/// Sorted ascending.
std::vector<NodeId> twin_unique_nodes(const EquivalencePartition& p, const TwinSets& twins);

/// Size histogram of twin sets: entry s counts sets of size s.
std::vector<std::size_t> twin_set_size_histogram(const TwinSets& twins);

}  // namespace dkanon
