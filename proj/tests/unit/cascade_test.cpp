#include "dkanon/cascade.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"

namespace dkanon {
namespace {

namespace sp = testing::sp;

TEST(Cascade, StarPendantTrace) {
  Graph g = testing::star_pendant();
  auto r = cascade(g, partition(g, 1));
  EXPECT_EQ(r.level_of, (std::vector<std::int32_t>{0, -1, -1, 0, 1}));
  EXPECT_EQ(r.seed_count(), 2u);
  EXPECT_EQ(r.max_level_reached, 1u);
  EXPECT_DOUBLE_EQ(r.uniqueness(), 0.6);
  EXPECT_DOUBLE_EQ(r.uniqueness_through(0), 0.4);
  EXPECT_EQ(r.identified_nodes(), (std::vector<NodeId>{sp::h, sp::l3, sp::p}));
  EXPECT_EQ(r.per_level_counts.front(), 2u);
  EXPECT_EQ(r.per_level_counts.at(1), 1u);
}

TEST(Cascade, NoSeeds) {
  Graph p4 = testing::path(4);
  auto r = cascade(p4, partition(p4, 1));
  EXPECT_EQ(r.identified_count(), 0u);
  EXPECT_EQ(r.max_level_reached, 0u);
  EXPECT_DOUBLE_EQ(c1_uniqueness(testing::cycle(5)), 0.0);
}

TEST(Cascade, C1Examples) { EXPECT_DOUBLE_EQ(c1_uniqueness(testing::star_pendant()), 0.6); }

TEST(Cascade, ZeroBudgetKeepsSeedsOnly) {
  Graph g = testing::star_pendant();
  auto r = cascade(g, partition(g, 1), 0);
  EXPECT_EQ(r.identified_count(), 2u);
  EXPECT_EQ(r.max_level_reached, 0u);
}

class CascadeCorpus : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(31);
    const double degrees[] = {2, 5, 10};
    for (int i = 0; i < 36; ++i)
      corpus.push_back(testing::model_instance(static_cast<ModelFamily>(i % 3), 50, degrees[(i / 3) % 3], rng()));
  }
  std::vector<Graph> corpus;
};

TEST_F(CascadeCorpus, InvariantsHold) {
  for (const Graph& g : corpus) {
    auto p1 = partition(g, 1);
    auto r = cascade(g, p1);
    std::size_t sum = 0;
    for (auto c : r.per_level_counts) sum += c;
    ASSERT_EQ(sum, r.identified_count());
    ASSERT_EQ(r.seed_count(), p1.unique_nodes().size());
    for (NodeId v = 0; v < g.node_count(); ++v) ASSERT_EQ(r.level_of[v] == 0, p1.is_unique(v));
    // Every level-l node has an identifier at level l-1 among its neighbors.
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (r.level_of[v] <= 0) continue;
      bool found = false;
      for (NodeId u : g.neighbors(v)) found |= r.level_of[u] == r.level_of[v] - 1;
      ASSERT_TRUE(found);
    }
  }
}

TEST_F(CascadeCorpus, C1IdentifiedNodesAreUniqueAtRadiusTwo) {
  for (const Graph& g : corpus) {
    auto r = cascade(g, partition(g, 1), 1);
    auto p2 = partition(g, 2);
    for (NodeId v : r.identified_nodes()) ASSERT_TRUE(p2.is_unique(v)) << v;
  }
}

TEST_F(CascadeCorpus, MonotoneInBudget) {
  for (const Graph& g : corpus) {
    auto p1 = partition(g, 1);
    auto full = cascade(g, p1);
    double prev = 0;
    for (std::size_t levels = 0; levels <= full.max_level_reached + 1; ++levels) {
      auto r = cascade(g, p1, levels);
      ASSERT_GE(r.uniqueness(), prev);
      ASSERT_DOUBLE_EQ(r.uniqueness(), full.uniqueness_through(levels));
      prev = r.uniqueness();
    }
    ASSERT_DOUBLE_EQ(prev, full.uniqueness());
  }
}

TEST_F(CascadeCorpus, IndependentOfNodeOrderAndThreads) {
  std::mt19937_64 rng(2);
  for (const Graph& g : corpus) {
    auto perm = testing::random_permutation(g.node_count(), rng);
    Graph h = testing::permuted(g, perm);
    auto a = cascade(g, partition(g, 1));
    CascadeOptions options;
    options.threads = 3;
    auto b = cascade(h, partition(h, 1), kExhaust, options);
    ASSERT_EQ(a.per_level_counts, b.per_level_counts);
    for (NodeId v = 0; v < g.node_count(); ++v) ASSERT_EQ(a.level_of[v], b.level_of[perm[v]]);
  }
}

}  // namespace
}  // namespace dkanon
