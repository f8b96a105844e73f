#include "dkanon/models.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "support/fixtures.hpp"

namespace dkanon {
namespace {

TEST(Generate, DeterministicForFixedSeed) {
  for (auto family : {ModelFamily::ER, ModelFamily::BA, ModelFamily::WS}) {
    ModelSpec spec{family, 100, 4, 0.3, 42};
    EXPECT_EQ(generate(spec).graph, generate(spec).graph) << to_string(family);
    spec.seed = 43;
    EXPECT_FALSE(generate(spec).graph == generate(ModelSpec{family, 100, 4, 0.3, 42}).graph);
  }
}

TEST(Generate, BarabasiAlbertEdgeCount) {
  for (std::size_t m : {1, 2, 5}) {
    const std::size_t n = 100;
    auto r = generate(ModelSpec{ModelFamily::BA, n, static_cast<double>(m), 0.5, 9});
    EXPECT_EQ(r.graph.node_count(), n);
    EXPECT_EQ(r.graph.edge_count(), m * (m - 1) / 2 + m * (n - m));
    for (NodeId v = 0; v < n; ++v) EXPECT_GE(r.graph.degree(v), m == 1 ? 1u : m - 1);
    for (NodeId v = static_cast<NodeId>(m); v < n; ++v) EXPECT_GE(r.graph.degree(v), m);
  }
}

TEST(Generate, WattsStrogatzWithoutRewiringIsRingLattice) {
  auto g = generate(ModelSpec{ModelFamily::WS, 50, 4, 0.0, 1}).graph;
  EXPECT_EQ(g.edge_count(), 100u);
  for (NodeId v = 0; v < 50; ++v) {
    EXPECT_EQ(g.degree(v), 4u);
    EXPECT_TRUE(g.has_edge(v, (v + 1) % 50));
    EXPECT_TRUE(g.has_edge(v, (v + 2) % 50));
  }
}

TEST(Generate, WattsStrogatzKeepsEdgeCount) {
  auto g = generate(ModelSpec{ModelFamily::WS, 300, 6, 0.5, 7}).graph;
  EXPECT_EQ(g.edge_count(), 900u);
}

TEST(Generate, ErdosRenyiAverageDegreeWithinThreeSigma) {
  const std::size_t n = 2000;
  const double k = 5;
  const double p = k / (n - 1);
  const double pairs = n * (n - 1) / 2.0;
  const double sigma = std::sqrt(pairs * p * (1 - p));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto r = generate(ModelSpec{ModelFamily::ER, n, k, 0.5, seed});
    EXPECT_NEAR(static_cast<double>(r.graph.edge_count()), pairs * p, 3 * sigma);
    EXPECT_EQ(r.graph.node_count() + r.report.nodes_dropped_isolated, n);
  }
}

TEST(Validate, RejectsInfeasibleSpecs) {
  EXPECT_THROW(validate(ModelSpec{ModelFamily::ER, 0, 2, 0.5, 0}), ModelError);
  EXPECT_THROW(validate(ModelSpec{ModelFamily::ER, 10, 10, 0.5, 0}), ModelError);
  EXPECT_THROW(validate(ModelSpec{ModelFamily::ER, 10, -1, 0.5, 0}), ModelError);
  EXPECT_THROW(validate(ModelSpec{ModelFamily::BA, 5, 5, 0.5, 0}), ModelError);
  EXPECT_THROW(validate(ModelSpec{ModelFamily::BA, 10, 2.5, 0.5, 0}), ModelError);
  EXPECT_THROW(validate(ModelSpec{ModelFamily::WS, 10, 3, 0.5, 0}), ModelError);
  EXPECT_THROW(validate(ModelSpec{ModelFamily::WS, 10, 10, 0.5, 0}), ModelError);
  EXPECT_THROW(validate(ModelSpec{ModelFamily::WS, 10, 4, 1.5, 0}), ModelError);
  EXPECT_NO_THROW(validate(ModelSpec{ModelFamily::WS, 10, 4, 1.0, 0}));
}

TEST(ParseFamily, CaseInsensitive) {
  EXPECT_EQ(parse_family("ba"), ModelFamily::BA);
  EXPECT_EQ(parse_family("WS"), ModelFamily::WS);
  EXPECT_THROW(parse_family("gnp"), std::invalid_argument);
}

TEST(Rng, BelowIsInRangeAndUniformish) {
  Rng rng(5);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.below(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
  for (int i = 0; i < 1000; ++i) {
    double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(DeriveSeed, DistinctPerCell) {
  EXPECT_NE(derive_seed(1, ModelFamily::ER, 100, 2, 0), derive_seed(1, ModelFamily::ER, 100, 2, 1));
  EXPECT_NE(derive_seed(1, ModelFamily::ER, 100, 2, 0), derive_seed(1, ModelFamily::BA, 100, 2, 0));
  EXPECT_EQ(derive_seed(1, ModelFamily::WS, 100, 4, 3), derive_seed(1, ModelFamily::WS, 100, 4, 3));
}

TEST(Sweep, RowsAndDeterminism) {
  SweepGrid grid;
  grid.families = {ModelFamily::ER, ModelFamily::WS};
  grid.n_values = {60};
  grid.degree_values = {4};
  grid.repetitions = 3;
  grid.seed = 11;
  grid.measures.twin_unique = true;
  auto rows = sweep(grid);
  grid.threads = 4;
  auto again = sweep(grid);
  ASSERT_EQ(rows.size(), again.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].measure, again[i].measure);
    EXPECT_EQ(rows[i].mean, again[i].mean);
    EXPECT_EQ(rows[i].reps, 3u);
    EXPECT_TRUE(rows[i].error.empty());
  }
  // dk d=1,2; cascade 1,exhaust; max_level; and twin variants of each.
  std::size_t per_cell = 2 + 2 + 1 + 2 + 2;
  EXPECT_EQ(rows.size(), 2 * per_cell);
}

TEST(Sweep, InfeasibleCellRecordedInRow) {
  SweepGrid grid;
  grid.families = {ModelFamily::WS};
  grid.n_values = {20};
  grid.degree_values = {3};
  grid.repetitions = 2;
  auto rows = sweep(grid);
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) EXPECT_FALSE(row.error.empty());
}

TEST(Sweep, EmptyGridRejected) {
  SweepGrid grid;
  EXPECT_THROW(sweep(grid), std::invalid_argument);
}

}  // namespace
}  // namespace dkanon
