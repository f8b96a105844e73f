#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dkanon/cascade.hpp"
#include "dkanon/graph.hpp"

namespace dkanon {

enum class ModelFamily { ER, BA, WS };

std::string to_string(ModelFamily family);
/// Accepts "ER", "BA", "WS" (case-insensitive).
ModelFamily parse_family(const std::string& name);

/// degree_param is the average degree for ER, the number of edges per
/// arriving node (m) for BA, and the ring-lattice degree (k, even) for WS.
struct ModelSpec {
  ModelFamily family = ModelFamily::ER;
  std::size_t n = 0;
  double degree_param = 0;
  double rewiring_p = 0.5;
  std::uint64_t seed = 0;
};

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ModelError for infeasible specs.
void validate(const ModelSpec& spec);

/// Generates the model graph and applies load preprocessing (isolated nodes
/// dropped). Node labels are the generator's node indices.
LoadResult generate(const ModelSpec& spec);

/// Generator randomness: std::mt19937_64 (fully specified by the standard)
/// with portable integer and real conversions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound); bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Per-cell seed: a hash of the grid seed and cell coordinates.
std::uint64_t derive_seed(std::uint64_t grid_seed, ModelFamily family, std::size_t n, double degree,
                          std::size_t repetition);

struct MeasureSet {
  std::vector<std::size_t> d_values{1, 2};
  /// Cascade budgets; kExhaust for the final level.
  std::vector<std::size_t> cascade_levels{1, kExhaust};
  /// Also report twin-uniqueness variants.
  bool twin_unique = false;
};

struct SweepGrid {
  std::vector<ModelFamily> families{ModelFamily::ER, ModelFamily::BA, ModelFamily::WS};
  std::vector<std::size_t> n_values;
  std::vector<double> degree_values;
  double rewiring_p = 0.5;
  std::size_t repetitions = 10;
  std::uint64_t seed = 0;
  MeasureSet measures;
  unsigned threads = 1;
};

/// One aggregated table row. `measure` is one of dk, dk_twin, cascade,
/// cascade_twin, max_level; `d_or_level` holds d, the cascade budget, or
/// "exhaust".
struct SweepRow {
  ModelFamily family = ModelFamily::ER;
  std::size_t n = 0;
  double degree = 0;
  std::string measure;
  std::string d_or_level;
  double mean = 0;
  double std = 0;
  std::size_t reps = 0;
  std::string error;  // empty on success
};

/// Throws std::invalid_argument for an empty or invalid grid. Failures of
/// individual cells are recorded in their rows.
std::vector<SweepRow> sweep(const SweepGrid& grid);

}  // namespace dkanon
