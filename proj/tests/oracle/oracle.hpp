#pragma once

// Brute-force ground truth for differential testing. Nothing here reuses the
// library's neighborhood extraction, refinement, caching, or twin reduction;
// it only reads dkanon::Graph as an input container.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dkanon/graph.hpp"
#include "dkanon/neighborhood.hpp"

namespace dkanon::oracle {

class BoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kPermutationBound = 10;
inline constexpr std::size_t kBacktrackBound = 64;
inline constexpr std::size_t kReferenceBound = 30;

/// Dense adjacency matrix.
using Matrix = std::vector<std::vector<char>>;

Matrix adjacency_matrix(const Graph& g);

/// Exhaustive search over all bijections that send focal to focal.
/// Throws BoundExceeded above kPermutationBound nodes.
bool anchored_isomorphic(const Graph& a, NodeId focal_a, const Graph& b, NodeId focal_b);
bool anchored_isomorphic(const NeighborhoodView& a, const NeighborhoodView& b);

/// Plain backtracking: extend a partial focal-preserving map one vertex at a
/// time, checking adjacency against every mapped vertex. No refinement.
/// Throws BoundExceeded above kBacktrackBound nodes.
bool anchored_isomorphic_backtrack(const Matrix& a, NodeId focal_a, const Matrix& b, NodeId focal_b);

/// Nodes within `d` hops of v, via an all-pairs BFS on the adjacency matrix.
std::vector<NodeId> ball(const Matrix& adj, NodeId v, std::size_t d);
Matrix induced(const Matrix& adj, const std::vector<NodeId>& nodes);

struct ReferenceCascade {
  std::vector<int> level_of;  // -1 when never identified
  std::vector<std::size_t> per_level_counts;
  std::size_t max_level = 0;
};

struct ReferenceMeasures {
  /// partitions[d-1][v] = class label; labels are the smallest member.
  std::vector<std::vector<NodeId>> partitions;
  ReferenceCascade cascade;       // exhaust budget
  ReferenceCascade twin_cascade;  // exhaust budget
  /// Twin relation: twin_group[v] = smallest twin of v (or v itself), kind
  /// per node: 0 none, 1 open, 2 closed.
  std::vector<NodeId> twin_group;
  std::vector<int> twin_kind;
  /// twin_unique[d-1] = sorted twin-unique nodes at distance d.
  std::vector<std::vector<NodeId>> twin_unique;
};

/// Every measure by the most direct method. Throws BoundExceeded above
/// kReferenceBound nodes.
ReferenceMeasures reference_measures(const Graph& g, std::size_t max_d = 3);

/// Literal transcription of the cascade pseudocode given 1-equivalence labels.
ReferenceCascade reference_cascade(const Matrix& adj, const std::vector<NodeId>& class1, std::size_t max_levels);

/// Canonical form by minimizing the adjacency bit string over all n!
/// permutations. For deduplicating tiny graphs only.
std::uint64_t brute_canonical_form(const Matrix& adj);

/// Same minimization restricted to permutations that put `focal` first:
/// equal forms iff anchored-isomorphic. Throws BoundExceeded above
/// kPermutationBound nodes.
std::uint64_t anchored_canonical_form(const Matrix& adj, NodeId focal);

/// All connected graphs on 1..max_n nodes, one per isomorphism class
/// (max_n <= 7). Built by extending each connected graph on k nodes by a
/// vertex joined to every nonempty subset, deduplicated by brute force.
std::vector<Graph> connected_graph_family(std::size_t max_n);

}  // namespace dkanon::oracle
