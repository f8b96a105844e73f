#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dkanon/canonical.hpp"
#include "dkanon/graph.hpp"

namespace dkanon {

using ClassId = std::uint32_t;

/// Grouping of all nodes into d-equivalence classes. Class ids are ordered
/// by the smallest member node.
struct EquivalencePartition {
  std::size_t d = 0;
  std::vector<ClassId> class_of;
  std::vector<std::size_t> class_sizes;

  std::size_t node_count() const { return class_of.size(); }
  std::size_t class_count() const { return class_sizes.size(); }
  std::size_t class_size_of(NodeId v) const { return class_sizes[class_of[v]]; }
  bool is_unique(NodeId v) const { return class_size_of(v) == 1; }

  /// Members per class, each sorted ascending.
  std::vector<std::vector<NodeId>> classes() const;
  /// Nodes in singleton classes, ascending.
  std::vector<NodeId> unique_nodes() const;
};

/// Builds a partition from any per-node labels; equal labels share a class.
EquivalencePartition partition_from_labels(std::size_t d, std::span<const std::uint64_t> labels);

struct PartitionOptions {
  unsigned threads = 1;
  /// Canonicalize one representative per twin set and copy its class to the
  /// other members afterwards.
  bool twin_reduction = true;
  CanonicalOptions canonical;
  CertificateCache* cache = nullptr;
};

/// Requires d >= 1.
EquivalencePartition partition(const Graph& g, std::size_t d, const PartitionOptions& options = {});

/// Fraction of nodes that are at most k-anonymous, for k = 1..k_max.
struct AnonymityReport {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t k_max = 0;
  std::vector<double> fraction_at_most_k;  // index k-1

  double uniqueness() const { return fraction_at_most_k.empty() ? 0.0 : fraction_at_most_k.front(); }
  double at_most(std::size_t k) const { return fraction_at_most_k.at(k - 1); }
};

inline constexpr std::size_t kDefaultKMax = 5;

/// Requires k_max >= 1.
AnonymityReport report(const EquivalencePartition& p, std::size_t k_max = kDefaultKMax);

}  // namespace dkanon
