#include "dkanon/twins.hpp"

#include <algorithm>
#include <unordered_map>

#include "dkanon/hash.hpp"
#include "dkanon/neighborhood.hpp"
#include "dkanon/parallel.hpp"

namespace dkanon {

namespace {

// Groups nodes whose (open or closed) neighbor lists are identical; returns
// groups of size >= 2, members ascending, groups ordered by first member.
std::vector<std::vector<NodeId>> group_identical(const Graph& g, bool closed, unsigned threads) {
  const std::size_t n = g.node_count();
  std::vector<std::uint64_t> hashes(n);
  parallel_for(n, threads, [&](std::size_t v, unsigned) {
    const auto id = static_cast<NodeId>(v);
    if (closed) {
      auto row = closed_neighbor_set(g, id);
      hashes[v] = hash_range(std::span<const NodeId>(row), 1);
    } else {
      hashes[v] = hash_range(g.neighbors(id), 0);
    }
  });

  std::unordered_map<std::uint64_t, std::vector<NodeId>> buckets;
  buckets.reserve(n);
  for (NodeId v = 0; v < n; ++v) buckets[hashes[v]].push_back(v);

  auto same = [&](NodeId a, NodeId b) {
    if (g.degree(a) != g.degree(b)) return false;
    if (!closed) {
      auto ra = g.neighbors(a), rb = g.neighbors(b);
      return std::equal(ra.begin(), ra.end(), rb.begin());
    }
    return closed_neighbor_set(g, a) == closed_neighbor_set(g, b);
  };

  std::vector<std::vector<NodeId>> groups;
  for (auto& [h, members] : buckets) {
    if (members.size() < 2) continue;
    // Exact verification; a bucket may hold several groups on collision.
    std::vector<char> used(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (used[i]) continue;
      std::vector<NodeId> group{members[i]};
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!used[j] && same(members[i], members[j])) {
          used[j] = 1;
          group.push_back(members[j]);
        }
      }
      if (group.size() >= 2) groups.push_back(std::move(group));
    }
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

}  // namespace

TwinSets find_twins(const Graph& g, unsigned threads) {
  TwinSets t;
  t.open_sets = group_identical(g, false, threads);
  t.closed_sets = group_identical(g, true, threads);
  t.set_of.assign(g.node_count(), kNoTwinSet);
  std::size_t members = 0;
  for (std::uint32_t i = 0; i < t.set_count(); ++i) {
    for (NodeId v : t.set(i)) {
      t.set_of[v] = i;
      ++members;
    }
  }
  t.twin_fraction = g.node_count() == 0 ? 0.0 : static_cast<double>(members) / static_cast<double>(g.node_count());
  return t;
}

TwinReduction twin_reduce(const Graph& g, const TwinSets& twins) {
  TwinReduction r;
  r.representative_of.resize(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::uint32_t s = twins.set_of[v];
    r.representative_of[v] = s == kNoTwinSet ? v : twins.set(s).front();
    if (r.representative_of[v] == v) r.representatives.push_back(v);
  }
  return r;
}

std::vector<std::uint64_t> expand_labels(const TwinReduction& reduction,
                                         std::span<const std::uint64_t> representative_labels) {
  std::vector<std::uint64_t> rep_label(reduction.representative_of.size(), 0);
  for (std::size_t i = 0; i < reduction.representatives.size(); ++i) {
    rep_label[reduction.representatives[i]] = representative_labels[i];
  }
  std::vector<std::uint64_t> out(reduction.representative_of.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = rep_label[reduction.representative_of[v]];
  return out;
}

EquivalencePartition expand_partition(const TwinReduction& reduction, const EquivalencePartition& reduced) {
  std::vector<std::uint64_t> labels(reduced.class_of.begin(), reduced.class_of.end());
  auto full = expand_labels(reduction, labels);
  return partition_from_labels(reduced.d, full);
}

std::vector<NodeId> twin_unique_nodes(const EquivalencePartition& p, const TwinSets& twins) {
  // A class qualifies when it is a singleton or all members share a twin set.
  constexpr auto kMixed = static_cast<std::uint32_t>(-2);
  std::vector<std::uint32_t> class_set(p.class_count(), kNoTwinSet);
  std::vector<char> seen(p.class_count(), 0);
  for (NodeId v = 0; v < p.node_count(); ++v) {
    const ClassId c = p.class_of[v];
    const std::uint32_t s = twins.set_of[v];
    if (!seen[c]) {
      seen[c] = 1;
      class_set[c] = s == kNoTwinSet ? kMixed : s;
    } else if (class_set[c] != s) {
      class_set[c] = kMixed;
    }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < p.node_count(); ++v) {
    const ClassId c = p.class_of[v];
    if (p.class_sizes[c] == 1 || class_set[c] != kMixed) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> twin_set_size_histogram(const TwinSets& twins) {
  std::vector<std::size_t> hist;
  for (std::uint32_t i = 0; i < twins.set_count(); ++i) {
    const std::size_t s = twins.set(i).size();
    if (s >= hist.size()) hist.resize(s + 1, 0);
    ++hist[s];
  }
  return hist;
}

}  // namespace dkanon
