#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "dkanon/cascade.hpp"
#include "dkanon/equivalence.hpp"
#include "dkanon/graph.hpp"
#include "dkanon/models.hpp"
#include "dkanon/twins.hpp"

namespace dkanon {

inline constexpr int kReportSchemaVersion = 1;

/// Fixed 6-decimal rendering used by every CSV output.
std::string format_fraction(double value);

/// {d, n, k_max, fractions: [...]}; fractions[k-1] is the fraction of nodes
/// that are at most k-anonymous.
nlohmann::json to_json(const AnonymityReport& r);
/// Header "d,n,k,fraction" and one row per k.
void write_csv(std::ostream& out, std::span<const AnonymityReport> reports);

/// {seeds, per_level_counts, max_level, uniqueness_c1, uniqueness_final}
nlohmann::json to_json(const CascadeResult& r);
/// Header "node,level"; one row per identified node, labels from `g`.
void write_levels_csv(std::ostream& out, const Graph& g, const CascadeResult& r);

/// {twin_fraction, open_sets, closed_sets, size_histogram}
nlohmann::json to_json(const TwinSets& t);

nlohmann::json to_json(const LoadReport& r);

/// Header "family,n,degree,measure,d_or_level,mean,std,reps".
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
nlohmann::json to_json(std::span<const SweepRow> rows);

/// Parses a sweep grid; see README for the schema. Unknown keys throw.
SweepGrid sweep_grid_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepGrid& grid);

}  // namespace dkanon
