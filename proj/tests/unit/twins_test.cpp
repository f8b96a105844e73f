#include "dkanon/twins.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dkanon/cascade.hpp"
#include "dkanon/neighborhood.hpp"
#include "support/fixtures.hpp"

namespace dkanon {
namespace {

using Sets = std::vector<std::vector<NodeId>>;

TEST(FindTwins, Examples) {
  auto star = find_twins(testing::star(3));
  EXPECT_EQ(star.open_sets, (Sets{{1, 2, 3}}));
  EXPECT_TRUE(star.closed_sets.empty());
  EXPECT_DOUBLE_EQ(star.twin_fraction, 0.75);
  EXPECT_TRUE(star.are_twins(1, 3));
  EXPECT_FALSE(star.are_twins(0, 1));

  auto tri = find_twins(testing::complete(3));
  EXPECT_EQ(tri.closed_sets, (Sets{{0, 1, 2}}));
  EXPECT_DOUBLE_EQ(tri.twin_fraction, 1.0);

  auto p4 = find_twins(testing::path(4));
  EXPECT_EQ(p4.set_count(), 0u);
  EXPECT_DOUBLE_EQ(p4.twin_fraction, 0.0);
}

TEST(FindTwins, SetsSatisfyDefinitionsOnRandomGraphs) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::random_gnp(30, 0.05 + 0.02 * (trial % 10), rng);
    auto twins = find_twins(g, 1 + trial % 3);
    std::vector<int> seen(g.node_count(), 0);
    for (std::uint32_t s = 0; s < twins.set_count(); ++s) {
      const auto& set = twins.set(s);
      const bool closed = s >= twins.open_sets.size();
      ASSERT_GE(set.size(), 2u);
      for (NodeId v : set) {
        ++seen[v];
        ASSERT_EQ(twins.set_of[v], s);
      }
      for (std::size_t i = 1; i < set.size(); ++i) {
        auto a = closed ? closed_neighbor_set(g, set[0]) : open_neighbor_set(g, set[0]);
        auto b = closed ? closed_neighbor_set(g, set[i]) : open_neighbor_set(g, set[i]);
        ASSERT_EQ(a, b);
      }
    }
    // Maximality: any pair with equal open or closed sets shares a set.
    std::size_t in_sets = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      ASSERT_LE(seen[v], 1);
      in_sets += seen[v];
      for (NodeId w = v + 1; w < g.node_count(); ++w) {
        bool twin = open_neighbor_set(g, v) == open_neighbor_set(g, w) ||
                    closed_neighbor_set(g, v) == closed_neighbor_set(g, w);
        ASSERT_EQ(twins.are_twins(v, w), twin);
      }
    }
    ASSERT_DOUBLE_EQ(twins.twin_fraction, static_cast<double>(in_sets) / g.node_count());
  }
}

TEST(TwinReduce, Examples) {
  Graph tri = testing::complete(3);
  auto r = twin_reduce(tri, find_twins(tri));
  EXPECT_EQ(r.representatives, (std::vector<NodeId>{0}));
  auto expanded = expand_partition(r, partition_from_labels(1, std::vector<std::uint64_t>{0}));
  EXPECT_EQ(expanded.classes(), (Sets{{0, 1, 2}}));

  Graph star = testing::star(3);
  auto rs = twin_reduce(star, find_twins(star));
  EXPECT_EQ(rs.representatives, (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(rs.representative_of, (std::vector<NodeId>{0, 1, 1, 1}));
  EXPECT_EQ(expand_labels(rs, std::vector<std::uint64_t>{10, 20}), (std::vector<std::uint64_t>{10, 20, 20, 20}));

  Graph p4 = testing::path(4);
  EXPECT_EQ(twin_reduce(p4, find_twins(p4)).representatives, (std::vector<NodeId>{0, 1, 2, 3}));
}

TEST(TwinUnique, Examples) {
  Graph tri = testing::complete(3);
  EXPECT_EQ(twin_unique_nodes(partition(tri, 1), find_twins(tri)), (std::vector<NodeId>{0, 1, 2}));
  Graph c5 = testing::cycle(5);
  EXPECT_TRUE(twin_unique_nodes(partition(c5, 1), find_twins(c5)).empty());
}

TEST(TwinCascade, Examples) {
  Graph g = testing::star_pendant();
  auto r = twin_cascade(g, partition(g, 1), find_twins(g));
  EXPECT_DOUBLE_EQ(r.uniqueness(), 1.0);
  EXPECT_EQ(r.max_level_reached, 1u);
  EXPECT_EQ(r.level_of, (std::vector<std::int32_t>{0, 1, 1, 0, 1}));

  Graph tri = testing::complete(3);
  auto t = twin_cascade(tri, partition(tri, 1), find_twins(tri));
  EXPECT_EQ(t.per_level_counts.front(), 3u);
  EXPECT_EQ(t.max_level_reached, 0u);
}

TEST(TwinCascade, EqualsCascadeOnTwinFreeGraphs) {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 20; ++trial) {
    Graph g = testing::model_instance(ModelFamily::WS, 40, 4, rng());
    auto twins = find_twins(g);
    if (twins.set_count() != 0) continue;
    ++checked;
    auto p1 = partition(g, 1);
    ASSERT_EQ(twin_cascade(g, p1, twins).level_of, cascade(g, p1).level_of);
  }
  EXPECT_GT(checked, 0);
}

TEST(Twins, MembersShareEveryEquivalenceClass) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::model_instance(static_cast<ModelFamily>(trial % 3), 50, 2 + 4 * (trial % 3), rng());
    auto twins = find_twins(g);
    PartitionOptions plain;
    plain.twin_reduction = false;
    for (std::size_t d = 1; d <= 3; ++d) {
      auto p = partition(g, d, plain);
      for (std::uint32_t s = 0; s < twins.set_count(); ++s)
        for (NodeId v : twins.set(s)) ASSERT_EQ(p.class_of[v], p.class_of[twins.set(s)[0]]);
    }
  }
}

TEST(Twins, SizeHistogram) {
  EXPECT_EQ(twin_set_size_histogram(find_twins(testing::star(3))), (std::vector<std::size_t>{0, 0, 0, 1}));
}

}  // namespace
}  // namespace dkanon
