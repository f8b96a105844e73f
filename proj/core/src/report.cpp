#include "dkanon/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>

namespace dkanon {

std::string format_fraction(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

namespace {

std::string format_degree(double degree) {
  if (std::floor(degree) == degree) return std::to_string(static_cast<long long>(degree));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", degree);
  return buf;
}

std::string level_name(std::size_t level) { return level == kExhaust ? "exhaust" : std::to_string(level); }

std::size_t parse_level(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "exhaust") return kExhaust;
    return std::stoul(j.get<std::string>());
  }
  return j.get<std::size_t>();
}

}  // namespace

nlohmann::json to_json(const AnonymityReport& r) {
  return {{"d", r.d}, {"n", r.n}, {"k_max", r.k_max}, {"fractions", r.fraction_at_most_k}};
}

void write_csv(std::ostream& out, std::span<const AnonymityReport> reports) {
  out << "d,n,k,fraction\n";
  for (const auto& r : reports) {
    for (std::size_t k = 1; k <= r.k_max; ++k) {
      out << r.d << ',' << r.n << ',' << k << ',' << format_fraction(r.at_most(k)) << '\n';
    }
  }
}

nlohmann::json to_json(const CascadeResult& r) {
  return {{"seeds", r.seed_count()},
          {"per_level_counts", r.per_level_counts},
          {"max_level", r.max_level_reached},
          {"uniqueness_c1", r.uniqueness_through(1)},
          {"uniqueness_final", r.uniqueness()}};
}

void write_levels_csv(std::ostream& out, const Graph& g, const CascadeResult& r) {
  out << "node,level\n";
  for (NodeId v = 0; v < r.node_count(); ++v) {
    if (r.identified(v)) out << g.label(v) << ',' << r.level_of[v] << '\n';
  }
}

nlohmann::json to_json(const TwinSets& t) {
  return {{"twin_fraction", t.twin_fraction},
          {"open_sets", t.open_sets.size()},
          {"closed_sets", t.closed_sets.size()},
          {"size_histogram", twin_set_size_histogram(t)}};
}

nlohmann::json to_json(const LoadReport& r) {
  return {{"nodes_kept", r.nodes_kept},
          {"nodes_dropped_isolated", r.nodes_dropped_isolated},
          {"self_loops_removed", r.self_loops_removed},
          {"duplicate_edges_merged", r.duplicate_edges_merged},
          {"direction_collapsed", r.direction_collapsed},
          {"nodes_dropped_outside_giant", r.nodes_dropped_outside_giant}};
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "family,n,degree,measure,d_or_level,mean,std,reps\n";
  for (const auto& r : rows) {
    out << to_string(r.family) << ',' << r.n << ',' << format_degree(r.degree) << ',' << r.measure << ','
        << r.d_or_level << ',' << format_fraction(r.mean) << ',' << format_fraction(r.std) << ',' << r.reps << '\n';
  }
}

nlohmann::json to_json(std::span<const SweepRow> rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = {{"family", to_string(r.family)},
                          {"n", r.n},
                          {"degree", r.degree},
                          {"measure", r.measure},
                          {"d_or_level", r.d_or_level},
                          {"mean", std::isnan(r.mean) ? nlohmann::json(nullptr) : nlohmann::json(r.mean)},
                          {"std", std::isnan(r.std) ? nlohmann::json(nullptr) : nlohmann::json(r.std)},
                          {"reps", r.reps}};
    if (!r.error.empty()) row["error"] = r.error;
    out.push_back(std::move(row));
  }
  return out;
}

SweepGrid sweep_grid_from_json(const nlohmann::json& j) {
  static const std::set<std::string> known{"families", "n",        "degrees", "rewiring_p", "repetitions",
                                           "seed",     "d",        "levels",  "twin_unique", "threads"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw std::invalid_argument("unknown sweep grid key '" + key + "'");
  }
  SweepGrid grid;
  if (j.contains("families")) {
    grid.families.clear();
    for (const auto& f : j.at("families")) grid.families.push_back(parse_family(f.get<std::string>()));
  }
  if (j.contains("n")) grid.n_values = j.at("n").get<std::vector<std::size_t>>();
  if (j.contains("degrees")) grid.degree_values = j.at("degrees").get<std::vector<double>>();
  if (j.contains("rewiring_p")) grid.rewiring_p = j.at("rewiring_p").get<double>();
  if (j.contains("repetitions")) grid.repetitions = j.at("repetitions").get<std::size_t>();
  if (j.contains("seed")) grid.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("d")) grid.measures.d_values = j.at("d").get<std::vector<std::size_t>>();
  if (j.contains("levels")) {
    grid.measures.cascade_levels.clear();
    for (const auto& l : j.at("levels")) grid.measures.cascade_levels.push_back(parse_level(l));
  }
  if (j.contains("twin_unique")) grid.measures.twin_unique = j.at("twin_unique").get<bool>();
  if (j.contains("threads")) grid.threads = j.at("threads").get<unsigned>();
  return grid;
}

nlohmann::json to_json(const SweepGrid& grid) {
  nlohmann::json families = nlohmann::json::array();
  for (auto f : grid.families) families.push_back(to_string(f));
  nlohmann::json levels = nlohmann::json::array();
  for (auto l : grid.measures.cascade_levels) {
    if (l == kExhaust) {
      levels.push_back(level_name(l));
    } else {
      levels.push_back(l);
    }
  }
  return {{"families", families},
          {"n", grid.n_values},
          {"degrees", grid.degree_values},
          {"rewiring_p", grid.rewiring_p},
          {"repetitions", grid.repetitions},
          {"seed", grid.seed},
          {"d", grid.measures.d_values},
          {"levels", levels},
          {"twin_unique", grid.measures.twin_unique},
          {"threads", grid.threads}};
}

}  // namespace dkanon
