#include "dkanon/equivalence.hpp"

#include <stdexcept>
#include <unordered_map>

#include "dkanon/twins.hpp"

namespace dkanon {

std::vector<std::vector<NodeId>> EquivalencePartition::classes() const {
  std::vector<std::vector<NodeId>> out(class_sizes.size());
  for (std::size_t c = 0; c < class_sizes.size(); ++c) out[c].reserve(class_sizes[c]);
  for (NodeId v = 0; v < class_of.size(); ++v) out[class_of[v]].push_back(v);
  return out;
}

std::vector<NodeId> EquivalencePartition::unique_nodes() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < class_of.size(); ++v) {
    if (class_sizes[class_of[v]] == 1) out.push_back(v);
  }
  return out;
}

EquivalencePartition partition_from_labels(std::size_t d, std::span<const std::uint64_t> labels) {
  EquivalencePartition p;
  p.d = d;
  p.class_of.resize(labels.size());
  std::unordered_map<std::uint64_t, ClassId> ids;
  ids.reserve(labels.size());
  // Scanning nodes in order assigns ids by smallest member.
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = ids.try_emplace(labels[v], static_cast<ClassId>(p.class_sizes.size()));
    if (inserted) p.class_sizes.push_back(0);
    p.class_of[v] = it->second;
    ++p.class_sizes[it->second];
  }
  return p;
}

EquivalencePartition partition(const Graph& g, std::size_t d, const PartitionOptions& options) {
  if (d < 1) throw std::invalid_argument("neighborhood distance d must be >= 1");
  CertifyOptions certify{options.threads, options.canonical, options.cache};

  if (!options.twin_reduction) {
    std::vector<NodeId> all(g.node_count());
    for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
    auto ids = certify_all(g, d, all, certify);
    return partition_from_labels(d, ids);
  }

  // Twins are automorphic, hence equivalent at every d.
  TwinSets twins = find_twins(g, options.threads);
  TwinReduction reduction = twin_reduce(g, twins);
  auto ids = certify_all(g, d, reduction.representatives, certify);
  auto labels = expand_labels(reduction, ids);
  return partition_from_labels(d, labels);
}

AnonymityReport report(const EquivalencePartition& p, std::size_t k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  AnonymityReport r;
  r.d = p.d;
  r.n = p.node_count();
  r.k_max = k_max;
  // nodes_in_size[s] = number of nodes whose class has size s, for s <= k_max.
  std::vector<std::size_t> nodes_in_size(k_max + 1, 0);
  for (std::size_t size : p.class_sizes) {
    if (size <= k_max) nodes_in_size[size] += size;
  }
  r.fraction_at_most_k.resize(k_max);
  std::size_t cumulative = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    cumulative += nodes_in_size[k];
    r.fraction_at_most_k[k - 1] = r.n == 0 ? 0.0 : static_cast<double>(cumulative) / static_cast<double>(r.n);
  }
  return r;
}

}  // namespace dkanon
