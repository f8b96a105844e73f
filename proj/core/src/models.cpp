#include "dkanon/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <map>
#include <tuple>

#include "dkanon/hash.hpp"
#include "dkanon/parallel.hpp"

namespace dkanon {

std::string to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::ER: return "ER";
    case ModelFamily::BA: return "BA";
    case ModelFamily::WS: return "WS";
  }
  return "?";
}

ModelFamily parse_family(const std::string& name) {
  std::string upper = name;
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "ER") return ModelFamily::ER;
  if (upper == "BA") return ModelFamily::BA;
  if (upper == "WS") return ModelFamily::WS;
  throw ModelError("unknown model family '" + name + "' (expected ER, BA or WS)");
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t grid_seed, ModelFamily family, std::size_t n, double degree,
                          std::size_t repetition) {
  std::uint64_t degree_bits;
  std::memcpy(&degree_bits, &degree, sizeof degree_bits);
  std::uint64_t h = mix64(grid_seed);
  h = hash_combine(h, static_cast<std::uint64_t>(family));
  h = hash_combine(h, n);
  h = hash_combine(h, degree_bits);
  return hash_combine(h, repetition);
}

namespace {

bool is_integral(double x) { return std::floor(x) == x; }

std::vector<Edge> erdos_renyi(std::size_t n, double avg_degree, Rng& rng) {
  std::vector<Edge> edges;
  const double p = avg_degree / static_cast<double>(n - 1);
  if (p <= 0) return edges;
  if (p >= 1) {
    for (NodeId v = 1; v < n; ++v)
      for (NodeId w = 0; w < v; ++w) edges.emplace_back(w, v);
    return edges;
  }
  // Geometric skipping over the pairs (w, v), w < v.
  const double log_q = std::log1p(-p);
  std::int64_t v = 1, w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.uniform01();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
  }
  return edges;
}

// Preferential attachment over an m-node seed clique. Targets are drawn from
// the list of edge endpoints, so selection is proportional to degree.
std::vector<Edge> barabasi_albert(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Edge> edges;
  edges.reserve(m * (m - 1) / 2 + m * (n - m));
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());
  for (NodeId a = 0; a < m; ++a) {
    for (NodeId b = a + 1; b < m; ++b) {
      edges.emplace_back(a, b);
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }
  std::vector<NodeId> targets;
  for (std::size_t t = m; t < n; ++t) {
    targets.clear();
    while (targets.size() < m) {
      // Only reachable for m == 1, where the seed is a single edgeless node.
      NodeId candidate = endpoints.empty() ? static_cast<NodeId>(rng.below(t))
                                           : endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), candidate) == targets.end()) targets.push_back(candidate);
    }
    for (NodeId target : targets) {
      edges.emplace_back(target, static_cast<NodeId>(t));
      endpoints.push_back(target);
      endpoints.push_back(static_cast<NodeId>(t));
    }
  }
  return edges;
}

// Ring lattice with k/2 neighbors per side; each lattice edge (u, u+j) is
// rewired with probability p to (u, w) for uniform w, avoiding self-loops
// and duplicate edges.
std::vector<Edge> watts_strogatz(std::size_t n, std::size_t k, double p, Rng& rng) {
  std::vector<std::vector<NodeId>> adj(n);
  auto connect = [&](NodeId a, NodeId b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  auto disconnect = [&](NodeId a, NodeId b) {
    adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b));
    adj[b].erase(std::find(adj[b].begin(), adj[b].end(), a));
  };
  auto linked = [&](NodeId a, NodeId b) { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); };

  for (std::size_t j = 1; j <= k / 2; ++j)
    for (std::size_t u = 0; u < n; ++u) connect(static_cast<NodeId>(u), static_cast<NodeId>((u + j) % n));

  if (p > 0) {
    for (std::size_t j = 1; j <= k / 2; ++j) {
      for (std::size_t u = 0; u < n; ++u) {
        if (rng.uniform01() >= p) continue;
        const auto a = static_cast<NodeId>(u);
        const auto b = static_cast<NodeId>((u + j) % n);
        if (!linked(a, b) || adj[a].size() >= n - 1) continue;
        NodeId w;
        do {
          w = static_cast<NodeId>(rng.below(n));
        } while (w == a || linked(a, w));
        disconnect(a, b);
        connect(a, w);
      }
    }
  }

  std::vector<Edge> edges;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b : adj[a])
      if (a < b) edges.emplace_back(a, b);
  return edges;
}

}  // namespace

void validate(const ModelSpec& spec) {
  if (spec.n < 2) throw ModelError("model needs n >= 2");
  if (!(spec.degree_param >= 1)) throw ModelError("degree parameter must be >= 1");
  switch (spec.family) {
    case ModelFamily::ER:
      if (spec.degree_param > static_cast<double>(spec.n - 1))
        throw ModelError("ER average degree exceeds n - 1");
      break;
    case ModelFamily::BA:
      if (!is_integral(spec.degree_param)) throw ModelError("BA m must be an integer");
      if (spec.degree_param >= static_cast<double>(spec.n)) throw ModelError("BA requires m < n");
      break;
    case ModelFamily::WS:
      if (!is_integral(spec.degree_param) || static_cast<std::size_t>(spec.degree_param) % 2 != 0)
        throw ModelError("WS k must be an even integer");
      if (spec.degree_param >= static_cast<double>(spec.n)) throw ModelError("WS requires k < n");
      if (!(spec.rewiring_p >= 0 && spec.rewiring_p <= 1)) throw ModelError("WS rewiring probability must be in [0, 1]");
      break;
  }
}

LoadResult generate(const ModelSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  switch (spec.family) {
    case ModelFamily::ER: edges = erdos_renyi(spec.n, spec.degree_param, rng); break;
    case ModelFamily::BA: edges = barabasi_albert(spec.n, static_cast<std::size_t>(spec.degree_param), rng); break;
    case ModelFamily::WS:
      edges = watts_strogatz(spec.n, static_cast<std::size_t>(spec.degree_param), spec.rewiring_p, rng);
      break;
  }
  return preprocess_edges(spec.n, edges);
}

namespace {

struct CellKey {
  ModelFamily family;
  std::size_t n;
  double degree;
  friend bool operator<(const CellKey& a, const CellKey& b) {
    return std::tie(a.family, a.n, a.degree) < std::tie(b.family, b.n, b.degree);
  }
};

struct MeasureKey {
  std::string measure;
  std::string d_or_level;
  friend bool operator<(const MeasureKey& a, const MeasureKey& b) {
    return std::tie(a.measure, a.d_or_level) < std::tie(b.measure, b.d_or_level);
  }
};

std::string level_name(std::size_t level) { return level == kExhaust ? "exhaust" : std::to_string(level); }

// Every measure value for one generated graph.
std::vector<std::pair<MeasureKey, double>> measure_graph(const Graph& g, const MeasureSet& m) {
  std::vector<std::pair<MeasureKey, double>> out;
  TwinSets twins;
  if (m.twin_unique) twins = find_twins(g);

  EquivalencePartition p1;
  bool have_p1 = false;
  for (std::size_t d : m.d_values) {
    EquivalencePartition p = partition(g, d);
    out.push_back({{"dk", std::to_string(d)}, report(p, 1).uniqueness()});
    if (m.twin_unique) {
      out.push_back({{"dk_twin", std::to_string(d)},
                     static_cast<double>(twin_unique_nodes(p, twins).size()) / static_cast<double>(g.node_count())});
    }
    if (d == 1) {
      p1 = std::move(p);
      have_p1 = true;
    }
  }
  if (!m.cascade_levels.empty()) {
    if (!have_p1) p1 = partition(g, 1);
    const std::size_t budget = *std::max_element(m.cascade_levels.begin(), m.cascade_levels.end());
    CascadeResult plain = cascade(g, p1, budget);
    for (std::size_t level : m.cascade_levels) {
      out.push_back({{"cascade", level_name(level)}, plain.uniqueness_through(level)});
    }
    if (budget == kExhaust) {
      out.push_back({{"max_level", "exhaust"}, static_cast<double>(plain.max_level_reached)});
    }
    if (m.twin_unique) {
      CascadeResult twin = twin_cascade(g, p1, twins, budget);
      for (std::size_t level : m.cascade_levels) {
        out.push_back({{"cascade_twin", level_name(level)}, twin.uniqueness_through(level)});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepGrid& grid) {
  if (grid.repetitions < 1) throw std::invalid_argument("sweep needs at least one repetition");
  if (grid.families.empty() || grid.n_values.empty() || grid.degree_values.empty())
    throw std::invalid_argument("sweep grid has an empty axis");
  for (std::size_t d : grid.measures.d_values)
    if (d < 1) throw std::invalid_argument("sweep d values must be >= 1");

  std::vector<CellKey> cells;
  for (auto f : grid.families)
    for (auto n : grid.n_values)
      for (auto deg : grid.degree_values) cells.push_back({f, n, deg});

  struct JobResult {
    std::vector<std::pair<MeasureKey, double>> values;
    std::string error;
  };
  const std::size_t reps = grid.repetitions;
  std::vector<JobResult> results(cells.size() * reps);
  parallel_for(results.size(), grid.threads, [&](std::size_t job, unsigned) {
    const CellKey& cell = cells[job / reps];
    const std::size_t rep = job % reps;
    ModelSpec spec{cell.family, cell.n, cell.degree, grid.rewiring_p,
                   derive_seed(grid.seed, cell.family, cell.n, cell.degree, rep)};
    try {
      LoadResult generated = generate(spec);
      results[job].values = measure_graph(generated.graph, grid.measures);
    } catch (const std::exception& e) {
      results[job].error = e.what();
    }
  });

  std::vector<SweepRow> rows;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::map<MeasureKey, std::vector<double>> samples;
    std::string error;
    for (std::size_t rep = 0; rep < reps; ++rep) {
      const JobResult& r = results[c * reps + rep];
      if (!r.error.empty()) {
        if (error.empty()) error = r.error;
        continue;
      }
      for (const auto& [key, value] : r.values) samples[key].push_back(value);
    }
    if (samples.empty()) {
      SweepRow row{cells[c].family, cells[c].n, cells[c].degree, "all", "", std::nan(""), std::nan(""), 0, error};
      rows.push_back(row);
      continue;
    }
    for (const auto& [key, values] : samples) {
      double mean = 0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      double var = 0;
      for (double v : values) var += (v - mean) * (v - mean);
      const double sd = values.size() > 1 ? std::sqrt(var / static_cast<double>(values.size() - 1)) : 0.0;
      rows.push_back({cells[c].family, cells[c].n, cells[c].degree, key.measure, key.d_or_level, mean, sd,
                      values.size(), error});
    }
  }
  return rows;
}

}  // namespace dkanon
