#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dkanon/graph.hpp"
#include "dkanon/neighborhood.hpp"

namespace dkanon {

/// Cheap isomorphism invariants of an anchored view. Anchored-isomorphic
/// views always have equal keys; unequal keys prove non-equivalence.
struct InvariantKey {
  std::uint32_t node_count = 0;
  std::uint64_t edge_count = 0;
  std::uint32_t focal_degree = 0;
  std::uint64_t degree_sequence_hash = 0;
  std::uint64_t color_histogram_hash = 0;

  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
};

struct InvariantKeyHash {
  std::size_t operator()(const InvariantKey& k) const;
};

/// Canonical byte string of an anchored graph: equal bytes iff an
/// isomorphism maps one focal node onto the other.
///
/// Layout: u32 node count, u32 focal position (little-endian), then for
/// graphs up to the dense bound the row-major bit-packed strict upper
/// triangle of the canonically relabeled adjacency matrix. Larger graphs
/// store u64 edge count followed by sorted (u32, u32) relabeled edges.
struct Certificate {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

struct CanonicalOptions {
  /// Views above this node count use the sparse certificate layout.
  std::size_t dense_node_bound = 4096;
};

/// Search statistics, mostly for tests and benchmarks.
struct CanonicalStats {
  std::size_t tree_nodes = 0;
  std::size_t leaves = 0;
  std::size_t automorphisms = 0;
};

InvariantKey invariant_key(const Graph& g, NodeId focal);
inline InvariantKey invariant_key(const NeighborhoodView& view) {
  return invariant_key(view.local_graph, view.focal);
}

/// Canonical labeling by color refinement plus individualization-refinement
/// search over a focal/rest two-coloring.
Certificate canonical_certificate(const Graph& g, NodeId focal, const CanonicalOptions& options = {},
                                  CanonicalStats* stats = nullptr);
inline Certificate canonical_certificate(const NeighborhoodView& view,
                                         const CanonicalOptions& options = {}) {
  return canonical_certificate(view.local_graph, view.focal, options);
}

/// The canonical relabeling itself: position -> vertex of the chosen leaf.
std::vector<NodeId> canonical_labeling(const Graph& g, NodeId focal, const CanonicalOptions& options = {},
                                       CanonicalStats* stats = nullptr);

using CertificateId = std::uint64_t;

/// Interns certificates to small integer ids. Thread-safe; sharded by
/// invariant key hash.
///
/// Two lookups are kept: the exact BFS-ordered view encoding (checked before
/// canonicalization; identical encodings are trivially isomorphic) and the
/// canonical certificate. Nothing is evicted within a run.
class CertificateCache {
 public:
  CertificateCache();
  CertificateCache(const CertificateCache&) = delete;
  CertificateCache& operator=(const CertificateCache&) = delete;

  /// Looks up a raw view encoding; returns true and sets `id` on a hit.
  bool find_raw(std::size_t radius, const InvariantKey& key, const std::string& raw, CertificateId& id);
  void remember_raw(std::size_t radius, const InvariantKey& key, std::string raw, CertificateId id);

  /// Insert-or-get of a canonical certificate.
  CertificateId intern(std::size_t radius, const InvariantKey& key, const Certificate& cert);

  /// An id never returned by intern, for views proven unique by their key.
  CertificateId fresh_id() { return next_id_++; }

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  std::size_t size() const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, CertificateId> raw;
    std::unordered_map<std::string, CertificateId> canonical;
  };
  Shard& shard_for(const InvariantKey& key);
  static std::string compose(std::size_t radius, const InvariantKey& key, std::string_view body);

  std::array<std::unique_ptr<Shard>, kShards> shards_;
  std::atomic<CertificateId> next_id_{0};
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

struct CertifyOptions {
  unsigned threads = 1;
  CanonicalOptions canonical;
  /// Shared cache; a private one is used when null.
  CertificateCache* cache = nullptr;
};

/// Certificate ids for the radius-`radius` neighborhoods of `nodes`,
/// aligned with `nodes`. Two entries are equal iff the nodes are
/// equivalent at that radius. Ids are only comparable within one call
/// (or across calls sharing a cache, for canonicalized nodes).
std::vector<CertificateId> certify_all(const Graph& g, std::size_t radius, std::span<const NodeId> nodes,
                                       const CertifyOptions& options = {});

}  // namespace dkanon
