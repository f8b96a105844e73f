#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "dkanon/equivalence.hpp"
#include "dkanon/graph.hpp"
#include "dkanon/twins.hpp"

namespace dkanon {

/// Level budget meaning "run until no new node is identified".
inline constexpr std::size_t kExhaust = std::numeric_limits<std::size_t>::max();

inline constexpr std::int32_t kNotIdentified = -1;

struct CascadeResult {
  /// Per node: level of first identification (0 for seeds), or kNotIdentified.
  std::vector<std::int32_t> level_of;
  /// Newly identified nodes per executed level; entry 0 counts the seeds.
  std::vector<std::size_t> per_level_counts;
  /// Last level that identified at least one node (0 if none beyond seeds).
  std::size_t max_level_reached = 0;

  std::size_t node_count() const { return level_of.size(); }
  std::size_t identified_count() const;
  std::size_t seed_count() const { return per_level_counts.empty() ? 0 : per_level_counts.front(); }
  /// Identified nodes at levels 0..level, as a fraction of all nodes.
  double uniqueness_through(std::size_t level) const;
  double uniqueness() const { return uniqueness_through(kExhaust); }
  bool identified(NodeId v) const { return level_of[v] != kNotIdentified; }
  std::vector<NodeId> identified_nodes() const;
};

struct CascadeOptions {
  unsigned threads = 1;
};

/// Propagates identification from the unique nodes of the d=1 partition
/// `p1`: a neighbor v of an identified node u becomes identified when no
/// other neighbor of u shares v's 1-equivalence class.
CascadeResult cascade(const Graph& g, const EquivalencePartition& p1, std::size_t max_levels = kExhaust,
                      const CascadeOptions& options = {});

/// Fraction identified within one cascade level.
double c1_uniqueness(const Graph& g, const EquivalencePartition& p1);
double c1_uniqueness(const Graph& g);

/// Twin-aware cascade: seeds are the twin-unique nodes of `p1`, and a
/// candidate set made entirely of mutual twins is identified as a whole.
CascadeResult twin_cascade(const Graph& g, const EquivalencePartition& p1, const TwinSets& twins,
                           std::size_t max_levels = kExhaust, const CascadeOptions& options = {});

}  // namespace dkanon
