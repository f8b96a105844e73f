#include "dkanon/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "dkanon/hash.hpp"
#include "dkanon/parallel.hpp"

namespace dkanon {

std::size_t InvariantKeyHash::operator()(const InvariantKey& k) const {
  std::uint64_t h = hash_combine(k.node_count, k.edge_count);
  h = hash_combine(h, k.focal_degree);
  h = hash_combine(h, k.degree_sequence_hash);
  return static_cast<std::size_t>(hash_combine(h, k.color_histogram_hash));
}

InvariantKey invariant_key(const Graph& g, NodeId focal) {
  const std::size_t n = g.node_count();
  InvariantKey key;
  key.node_count = static_cast<std::uint32_t>(n);
  key.edge_count = g.edge_count();
  key.focal_degree = static_cast<std::uint32_t>(g.degree(focal));

  std::vector<std::uint64_t> degrees(n);
  for (NodeId v = 0; v < n; ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());
  key.degree_sequence_hash = hash_range(std::span<const std::uint64_t>(degrees));

  // Hash-based color refinement: colors are label-free hashes, so the final
  // histogram is comparable across views.
  std::vector<std::uint64_t> color(n, mix64(2)), next(n), scratch;
  color[focal] = mix64(1);
  std::size_t classes = n > 1 ? 2 : 1;
  for (std::size_t round = 0; round < n; ++round) {
    for (NodeId v = 0; v < n; ++v) {
      scratch.clear();
      for (NodeId w : g.neighbors(v)) scratch.push_back(color[w]);
      std::sort(scratch.begin(), scratch.end());
      next[v] = hash_range(std::span<const std::uint64_t>(scratch), color[v]);
    }
    scratch = next;
    std::sort(scratch.begin(), scratch.end());
    auto distinct = static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
    color.swap(next);
    if (distinct <= classes) break;
    classes = distinct;
  }
  std::sort(color.begin(), color.end());
  key.color_histogram_hash = hash_range(std::span<const std::uint64_t>(color));
  return key;
}

namespace {

// Ordered partition of 0..n-1 into contiguous cells of `lab`.
struct OrderedPartition {
  std::vector<NodeId> lab;          // position -> vertex
  std::vector<std::uint32_t> inv;   // vertex -> position
  std::vector<std::uint32_t> cell;  // vertex -> start position of its cell
  std::vector<std::uint32_t> end;   // cell start -> one past its last position
  std::size_t cells = 0;

  std::size_t size() const { return lab.size(); }
  bool discrete() const { return cells == lab.size(); }
};

// Equitable refinement with a splitter queue. Every decision depends only on
// cell positions and neighbor counts, never on vertex ids, so the result is
// an isomorphism-invariant function of the input partition.
class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), count_(g.node_count(), 0), queued_(g.node_count(), 0) {}

  void refine(OrderedPartition& p, std::span<const std::uint32_t> splitters) {
    for (auto s : splitters) enqueue(s);
    while (!queue_.empty()) {
      const std::uint32_t s = queue_.front();
      queue_.pop_front();
      queued_[s] = 0;
      if (p.discrete()) continue;

      touched_.clear();
      for (std::uint32_t pos = s; pos < p.end[s]; ++pos) {
        for (NodeId y : g_.neighbors(p.lab[pos])) {
          if (count_[y]++ == 0) touched_.push_back(y);
        }
      }
      groups_.clear();
      for (NodeId y : touched_) groups_.push_back({p.cell[y], count_[y], y});
      std::sort(groups_.begin(), groups_.end());

      for (std::size_t i = 0; i < groups_.size();) {
        std::size_t j = i;
        while (j < groups_.size() && groups_[j].cell == groups_[i].cell) ++j;
        split(p, i, j);
        i = j;
      }
      for (NodeId y : touched_) count_[y] = 0;
    }
  }

  /// Moves `v` to the front of its cell as a new singleton cell.
  static std::uint32_t individualize(OrderedPartition& p, NodeId v) {
    const std::uint32_t cs = p.cell[v];
    const std::uint32_t ce = p.end[cs];
    const std::uint32_t pos = p.inv[v];
    NodeId other = p.lab[cs];
    std::swap(p.lab[cs], p.lab[pos]);
    p.inv[other] = pos;
    p.inv[v] = cs;
    p.end[cs] = cs + 1;
    p.end[cs + 1] = ce;
    for (std::uint32_t q = cs + 1; q < ce; ++q) p.cell[p.lab[q]] = cs + 1;
    ++p.cells;
    return cs;
  }

 private:
  struct Touch {
    std::uint32_t cell;
    std::uint32_t count;
    NodeId vertex;
    friend bool operator<(const Touch& a, const Touch& b) {
      return std::tie(a.cell, a.count, a.vertex) < std::tie(b.cell, b.count, b.vertex);
    }
  };

  void enqueue(std::uint32_t s) {
    if (!queued_[s]) {
      queued_[s] = 1;
      queue_.push_back(s);
    }
  }

  // Splits the cell holding groups_[first, last) by neighbor count. Untouched
  // members (count 0) stay at the front; touched ones follow by ascending
  // count.
  void split(OrderedPartition& p, std::size_t first, std::size_t last) {
    const std::uint32_t cs = groups_[first].cell;
    const std::uint32_t ce = p.end[cs];
    const std::uint32_t size = ce - cs;
    const auto k = static_cast<std::uint32_t>(last - first);
    if (size == 1) return;
    if (k == size && groups_[first].count == groups_[last - 1].count) return;

    const std::uint32_t tail = ce - k;
    // Swap untouched vertices out of the tail region.
    std::uint32_t head = cs;
    for (std::uint32_t q = tail; q < ce; ++q) {
      if (count_[p.lab[q]] != 0) continue;
      while (count_[p.lab[head]] == 0) ++head;
      NodeId a = p.lab[q], b = p.lab[head];
      p.lab[q] = b;
      p.lab[head] = a;
      p.inv[b] = q;
      p.inv[a] = head;
      ++head;
    }
    for (std::uint32_t t = 0; t < k; ++t) {
      NodeId v = groups_[first + t].vertex;
      p.lab[tail + t] = v;
      p.inv[v] = tail + t;
    }

    fragments_.clear();
    fragments_.push_back(cs);
    if (k < size) fragments_.push_back(tail);
    for (std::uint32_t t = 1; t < k; ++t) {
      if (groups_[first + t].count != groups_[first + t - 1].count) fragments_.push_back(tail + t);
    }
    if (fragments_.size() == 1) return;

    for (std::size_t f = 0; f < fragments_.size(); ++f) {
      const std::uint32_t fs = fragments_[f];
      const std::uint32_t fe = f + 1 < fragments_.size() ? fragments_[f + 1] : ce;
      p.end[fs] = fe;
      if (f > 0) {
        for (std::uint32_t q = fs; q < fe; ++q) p.cell[p.lab[q]] = fs;
      }
    }
    p.cells += fragments_.size() - 1;

    if (queued_[cs]) {
      for (std::size_t f = 1; f < fragments_.size(); ++f) enqueue(fragments_[f]);
    } else {
      std::size_t largest = 0;
      for (std::size_t f = 1; f < fragments_.size(); ++f) {
        if (p.end[fragments_[f]] - fragments_[f] > p.end[fragments_[largest]] - fragments_[largest]) largest = f;
      }
      for (std::size_t f = 0; f < fragments_.size(); ++f) {
        if (f != largest) enqueue(fragments_[f]);
      }
    }
  }

  const Graph& g_;
  std::vector<std::uint32_t> count_;
  std::vector<char> queued_;
  std::deque<std::uint32_t> queue_;
  std::vector<NodeId> touched_;
  std::vector<Touch> groups_;
  std::vector<std::uint32_t> fragments_;
};

// Twin class per vertex: vertices share a class iff they have identical open
// or identical closed neighborhoods. A vertex belongs to at most one
// non-trivial twin set, so one id per vertex suffices.
std::vector<std::uint32_t> twin_classes(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> cls(n);
  std::iota(cls.begin(), cls.end(), 0u);

  auto group = [&](bool closed) {
    std::unordered_map<std::uint64_t, std::vector<NodeId>> buckets;
    std::vector<NodeId> row;
    for (NodeId v = 0; v < n; ++v) {
      row = closed ? closed_neighbor_set(g, v) : open_neighbor_set(g, v);
      buckets[hash_range(std::span<const NodeId>(row), closed ? 1 : 0)].push_back(v);
    }
    auto same = [&](NodeId a, NodeId b) {
      return closed ? closed_neighbor_set(g, a) == closed_neighbor_set(g, b)
                    : open_neighbor_set(g, a) == open_neighbor_set(g, b);
    };
    for (auto& [h, members] : buckets) {
      if (members.size() < 2) continue;
      // Verify against hash collisions: greedy grouping by exact equality.
      std::vector<char> done(members.size(), 0);
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (!done[j] && same(members[i], members[j])) {
            done[j] = 1;
            cls[members[j]] = cls[members[i]];
          }
        }
      }
    }
  };
  group(false);
  group(true);
  return cls;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, NodeId focal, CanonicalStats* stats)
      : g_(g), n_(g.node_count()), focal_(focal), refiner_(g), twins_(twin_classes(g)),
        class_stamp_(n_, 0), stats_(stats) {
    // Cap generator storage at roughly 16M entries.
    max_generators_ = std::max<std::size_t>(8, (std::size_t{1} << 24) / std::max<std::size_t>(n_, 1));
  }

  std::vector<NodeId> run() {
    OrderedPartition root;
    root.lab.resize(n_);
    root.inv.resize(n_);
    root.cell.resize(n_);
    root.end.assign(n_ + 1, 0);
    root.lab[0] = focal_;
    std::uint32_t pos = 1;
    for (NodeId v = 0; v < n_; ++v) {
      if (v != focal_) root.lab[pos++] = v;
    }
    for (std::uint32_t p = 0; p < n_; ++p) {
      root.inv[root.lab[p]] = p;
      root.cell[root.lab[p]] = p == 0 ? 0 : 1;
    }
    root.end[0] = 1;
    if (n_ > 1) root.end[1] = static_cast<std::uint32_t>(n_);
    root.cells = n_ > 1 ? 2 : 1;
    std::vector<std::uint32_t> splitters{0};
    if (n_ > 1) splitters.push_back(1);
    refiner_.refine(root, splitters);

    search(std::move(root));
    if (stats_) stats_->automorphisms += generators_.size();
    return best_lab_;
  }

 private:
  struct Frame {
    OrderedPartition partition;
    std::vector<NodeId> candidates;
    std::size_t next = 0;
    std::vector<NodeId> tried;
    std::size_t fixed_added = 0;  // entries this node pushed on fixed_
    bool on_path = false;         // whether entering this node pushed on path_
    // Orbit cache for pruning.
    std::vector<std::uint32_t> orbit;
    std::size_t orbit_generators = static_cast<std::size_t>(-1);
  };

  void search(OrderedPartition root) {
    std::vector<Frame> stack;
    stack.emplace_back();
    stack.back().partition = std::move(root);
    if (!enter(stack.back())) {
      stack.pop_back();
      return;
    }
    while (!stack.empty()) {
      Frame& frame = stack.back();
      if (frame.next >= frame.candidates.size()) {
        pop(stack);
        continue;
      }
      const NodeId x = frame.candidates[frame.next++];
      if (!frame.tried.empty() && pruned(frame, x)) continue;
      frame.tried.push_back(x);

      Frame child;
      const bool last = frame.next >= frame.candidates.size();
      child.partition = last ? std::move(frame.partition) : frame.partition;
      std::uint32_t s = Refiner::individualize(child.partition, x);
      refiner_.refine(child.partition, std::span<const std::uint32_t>(&s, 1));
      fixed_.push_back(x);
      path_.push_back(x);
      child.fixed_added = 1;
      child.on_path = true;
      stack.push_back(std::move(child));
      if (!enter(stack.back())) {
        pop(stack);
        if (abort_to_ >= 0) {
          while (static_cast<std::ptrdiff_t>(stack.size()) - 1 > abort_to_) pop(stack);
          abort_to_ = -1;
        }
      }
    }
  }

  void pop(std::vector<Frame>& stack) {
    for (std::size_t i = 0; i < stack.back().fixed_added; ++i) fixed_.pop_back();
    if (stack.back().on_path) path_.pop_back();
    stack.pop_back();
  }

  // Prepares a freshly pushed frame. Returns false for leaves, which need no
  // further expansion. Bulk twin cells are resolved in place by looping.
  bool enter(Frame& frame) {
    for (;;) {
      if (stats_) ++stats_->tree_nodes;
      OrderedPartition& p = frame.partition;
      if (p.discrete()) {
        leaf(p);
        return false;
      }
      // Smallest non-singleton cell, ties by position.
      std::uint32_t best_start = 0, best_size = static_cast<std::uint32_t>(-1);
      for (std::uint32_t pos = 0; pos < n_; pos = p.end[pos]) {
        const std::uint32_t size = p.end[pos] - pos;
        if (size > 1 && size < best_size) {
          best_size = size;
          best_start = pos;
        }
      }
      ++stamp_;
      frame.candidates.clear();
      for (std::uint32_t pos = best_start; pos < best_start + best_size; ++pos) {
        NodeId v = p.lab[pos];
        if (class_stamp_[twins_[v]] != stamp_) {
          class_stamp_[twins_[v]] = stamp_;
          frame.candidates.push_back(v);
        }
      }
      if (frame.candidates.size() > 1) return true;

      // The whole cell is one twin class: every ordering of it is related by
      // automorphisms fixing everything else, so discretize it directly.
      std::vector<NodeId> members(p.lab.begin() + best_start, p.lab.begin() + best_start + best_size);
      std::vector<std::uint32_t> splitters;
      for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        splitters.push_back(Refiner::individualize(p, members[i]));
      }
      splitters.push_back(p.cell[members.back()]);
      refiner_.refine(p, splitters);
      for (NodeId v : members) fixed_.push_back(v);
      frame.fixed_added += members.size();
      // Bulk steps never diverge between paths; they do not extend path_.
    }
  }

  void leaf(const OrderedPartition& p) {
    if (stats_) ++stats_->leaves;
    std::vector<std::uint64_t> code;
    code.reserve(g_.edge_count());
    for (NodeId x = 0; x < n_; ++x) {
      const std::uint64_t px = p.inv[x];
      for (NodeId y : g_.neighbors(x)) {
        const std::uint64_t py = p.inv[y];
        if (px < py) code.push_back((px << 32) | py);
      }
    }
    std::sort(code.begin(), code.end());

    if (first_lab_.empty()) {
      first_code_ = best_code_ = std::move(code);
      first_lab_ = best_lab_ = p.lab;
      first_path_ = path_;
      return;
    }
    if (code == first_code_) {
      record_automorphism(first_lab_, p.lab);
      std::size_t k = 0;
      while (k < path_.size() && k < first_path_.size() && path_[k] == first_path_[k]) ++k;
      abort_to_ = static_cast<std::ptrdiff_t>(k);
      return;
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = p.lab;
    } else if (code == best_code_) {
      record_automorphism(best_lab_, p.lab);
    }
  }

  void record_automorphism(const std::vector<NodeId>& from, const std::vector<NodeId>& to) {
    if (generators_.size() >= max_generators_) return;
    std::vector<NodeId> perm(n_);
    bool identity = true;
    for (std::size_t pos = 0; pos < n_; ++pos) {
      perm[from[pos]] = to[pos];
      identity = identity && from[pos] == to[pos];
    }
    if (!identity) generators_.push_back(std::move(perm));
  }

  // True if `x` lies in the orbit of an already tried sibling under the
  // group generated by stored automorphisms that fix the current prefix.
  bool pruned(Frame& frame, NodeId x) {
    if (generators_.empty()) return false;
    if (frame.orbit_generators != generators_.size()) {
      frame.orbit.resize(n_);
      std::iota(frame.orbit.begin(), frame.orbit.end(), 0u);
      for (const auto& gen : generators_) {
        bool fixes = true;
        for (NodeId f : fixed_) {
          if (gen[f] != f) {
            fixes = false;
            break;
          }
        }
        if (!fixes) continue;
        for (NodeId v = 0; v < n_; ++v) {
          if (gen[v] != v) unite(frame.orbit, v, gen[v]);
        }
      }
      frame.orbit_generators = generators_.size();
    }
    const std::uint32_t root = find(frame.orbit, x);
    for (NodeId t : frame.tried) {
      if (find(frame.orbit, t) == root) return true;
    }
    return false;
  }

  static std::uint32_t find(std::vector<std::uint32_t>& uf, std::uint32_t v) {
    while (uf[v] != v) {
      uf[v] = uf[uf[v]];
      v = uf[v];
    }
    return v;
  }
  static void unite(std::vector<std::uint32_t>& uf, std::uint32_t a, std::uint32_t b) {
    a = find(uf, a);
    b = find(uf, b);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }

  const Graph& g_;
  const std::size_t n_;
  const NodeId focal_;
  Refiner refiner_;
  std::vector<std::uint32_t> twins_;
  std::vector<std::uint32_t> class_stamp_;
  std::uint32_t stamp_ = 0;
  CanonicalStats* stats_;

  std::vector<NodeId> fixed_;
  std::vector<NodeId> path_;
  std::vector<NodeId> first_path_;
  std::vector<std::uint64_t> first_code_, best_code_;
  std::vector<NodeId> first_lab_, best_lab_;
  std::vector<std::vector<NodeId>> generators_;
  std::size_t max_generators_;
  std::ptrdiff_t abort_to_ = -1;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

std::vector<NodeId> canonical_labeling(const Graph& g, NodeId focal, const CanonicalOptions&,
                                       CanonicalStats* stats) {
  if (focal >= g.node_count()) throw std::out_of_range("focal node out of range");
  CanonicalSearch search(g, focal, stats);
  return search.run();
}

Certificate canonical_certificate(const Graph& g, NodeId focal, const CanonicalOptions& options,
                                  CanonicalStats* stats) {
  const std::vector<NodeId> lab = canonical_labeling(g, focal, options, stats);
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[lab[p]] = static_cast<std::uint32_t>(p);

  Certificate cert;
  put_u32(cert.bytes, static_cast<std::uint32_t>(n));
  put_u32(cert.bytes, pos[focal]);
  if (n <= options.dense_node_bound) {
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t header = cert.bytes.size();
    cert.bytes.resize(header + (bits + 7) / 8, 0);
    // Row-major index of (i, j), i < j, within the strict upper triangle.
    auto index = [n](std::size_t i, std::size_t j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); };
    for (NodeId x = 0; x < n; ++x) {
      for (NodeId y : g.neighbors(x)) {
        std::size_t i = pos[x], j = pos[y];
        if (i < j) {
          std::size_t b = index(i, j);
          cert.bytes[header + b / 8] |= static_cast<std::uint8_t>(1u << (b % 8));
        }
      }
    }
  } else {
    std::vector<std::uint64_t> code;
    code.reserve(g.edge_count());
    for (NodeId x = 0; x < n; ++x) {
      for (NodeId y : g.neighbors(x)) {
        std::uint64_t i = pos[x], j = pos[y];
        if (i < j) code.push_back((i << 32) | j);
      }
    }
    std::sort(code.begin(), code.end());
    put_u64(cert.bytes, code.size());
    for (auto c : code) {
      put_u32(cert.bytes, static_cast<std::uint32_t>(c >> 32));
      put_u32(cert.bytes, static_cast<std::uint32_t>(c));
    }
  }
  return cert;
}

CertificateCache::CertificateCache() {
  for (auto& s : shards_) s = std::make_unique<Shard>();
}

CertificateCache::Shard& CertificateCache::shard_for(const InvariantKey& key) {
  return *shards_[InvariantKeyHash{}(key) % kShards];
}

std::string CertificateCache::compose(std::size_t radius, const InvariantKey& key, std::string_view body) {
  std::string out;
  out.reserve(40 + body.size());
  auto put = [&out](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
  };
  put(radius);
  put(key.node_count);
  put(key.edge_count);
  put(key.focal_degree);
  put(key.degree_sequence_hash);
  put(key.color_histogram_hash);
  out.append(body);
  return out;
}

bool CertificateCache::find_raw(std::size_t radius, const InvariantKey& key, const std::string& raw,
                                CertificateId& id) {
  Shard& shard = shard_for(key);
  const std::string k = compose(radius, key, raw);
  std::lock_guard lock(shard.mutex);
  auto it = shard.raw.find(k);
  if (it == shard.raw.end()) {
    ++misses_;
    return false;
  }
  ++hits_;
  id = it->second;
  return true;
}

void CertificateCache::remember_raw(std::size_t radius, const InvariantKey& key, std::string raw,
                                    CertificateId id) {
  Shard& shard = shard_for(key);
  std::string k = compose(radius, key, raw);
  std::lock_guard lock(shard.mutex);
  shard.raw.try_emplace(std::move(k), id);
}

CertificateId CertificateCache::intern(std::size_t radius, const InvariantKey& key, const Certificate& cert) {
  Shard& shard = shard_for(key);
  std::string k = compose(radius, key,
                          std::string_view(reinterpret_cast<const char*>(cert.bytes.data()), cert.bytes.size()));
  std::lock_guard lock(shard.mutex);
  auto it = shard.canonical.find(k);
  if (it != shard.canonical.end()) return it->second;
  const CertificateId id = next_id_++;
  shard.canonical.emplace(std::move(k), id);
  return id;
}

std::size_t CertificateCache::size() const {
  std::size_t total = 0;
  for (const auto& s : shards_) {
    std::lock_guard lock(s->mutex);
    total += s->canonical.size();
  }
  return total;
}

namespace {

// Exact encoding of a view in its BFS local order.
std::string raw_encoding(const Graph& g) {
  std::string out;
  auto put = [&out](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
  };
  put(static_cast<std::uint32_t>(g.node_count()));
  for (NodeId v = 0; v < g.node_count(); ++v) {
    put(static_cast<std::uint32_t>(g.degree(v)));
    for (NodeId w : g.neighbors(v)) {
      if (v < w) put(w);
    }
  }
  return out;
}

}  // namespace

std::vector<CertificateId> certify_all(const Graph& g, std::size_t radius, std::span<const NodeId> nodes,
                                       const CertifyOptions& options) {
  CertificateCache local_cache;
  CertificateCache& cache = options.cache ? *options.cache : local_cache;
  const unsigned threads = resolve_threads(options.threads);

  std::vector<NeighborhoodExtractor> extractors;
  extractors.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) extractors.emplace_back(g);

  std::vector<InvariantKey> keys(nodes.size());
  parallel_for(nodes.size(), threads, [&](std::size_t i, unsigned w) {
    keys[i] = invariant_key(extractors[w].extract(nodes[i], radius));
  });

  std::unordered_map<InvariantKey, std::vector<std::size_t>, InvariantKeyHash> buckets;
  for (std::size_t i = 0; i < nodes.size(); ++i) buckets[keys[i]].push_back(i);

  std::vector<CertificateId> ids(nodes.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (buckets[keys[i]].size() == 1) {
      ids[i] = cache.fresh_id();
    } else {
      pending.push_back(i);
    }
  }

  parallel_for(pending.size(), threads, [&](std::size_t j, unsigned w) {
    const std::size_t i = pending[j];
    NeighborhoodView view = extractors[w].extract(nodes[i], radius);
    std::string raw = raw_encoding(view.local_graph);
    CertificateId id;
    if (cache.find_raw(radius, keys[i], raw, id)) {
      ids[i] = id;
      return;
    }
    id = cache.intern(radius, keys[i], canonical_certificate(view, options.canonical));
    cache.remember_raw(radius, keys[i], std::move(raw), id);
    ids[i] = id;
  });
  return ids;
}

}  // namespace dkanon
