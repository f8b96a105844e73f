#include "dkanon/report.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "support/fixtures.hpp"

namespace dkanon {
namespace {

TEST(FormatFraction, SixDecimals) {
  EXPECT_EQ(format_fraction(1.0 / 3.0), "0.333333");
  EXPECT_EQ(format_fraction(1.0), "1.000000");
}

TEST(AnonymityJson, P3) {
  auto j = to_json(report(partition(testing::path(3), 1), 2));
  EXPECT_EQ(j["d"], 1);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["k_max"], 2);
  EXPECT_DOUBLE_EQ(j["fractions"][0].get<double>(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(j["fractions"][1].get<double>(), 1.0);
}

TEST(AnonymityCsv, Rows) {
  std::vector<AnonymityReport> reports{report(partition(testing::path(3), 1), 2)};
  std::ostringstream out;
  write_csv(out, reports);
  EXPECT_EQ(out.str(), "d,n,k,fraction\n1,3,1,0.333333\n1,3,2,1.000000\n");
}

TEST(CascadeJson, StarPendant) {
  Graph g = testing::star_pendant();
  auto r = cascade(g, partition(g, 1));
  auto j = to_json(r);
  EXPECT_EQ(j["seeds"], 2);
  EXPECT_EQ(j["max_level"], 1);
  EXPECT_DOUBLE_EQ(j["uniqueness_c1"].get<double>(), 0.6);
  EXPECT_DOUBLE_EQ(j["uniqueness_final"].get<double>(), 0.6);
  std::ostringstream out;
  write_levels_csv(out, g, r);
  EXPECT_EQ(out.str(), "node,level\n0,0\n3,0\n4,1\n");
}

TEST(TwinJson, Star) {
  auto j = to_json(find_twins(testing::star(3)));
  EXPECT_DOUBLE_EQ(j["twin_fraction"].get<double>(), 0.75);
  EXPECT_EQ(j["open_sets"], 1);
  EXPECT_EQ(j["closed_sets"], 0);
}

TEST(SweepGridJson, RoundTripAndErrors) {
  auto j = nlohmann::json::parse(R"({"families":["ER","ba"],"n":[100,1000],"degrees":[2,5],
    "repetitions":3,"seed":9,"d":[1,2,3],"levels":[1,"exhaust"],"twin_unique":true})");
  SweepGrid grid = sweep_grid_from_json(j);
  EXPECT_EQ(grid.families, (std::vector<ModelFamily>{ModelFamily::ER, ModelFamily::BA}));
  EXPECT_EQ(grid.n_values, (std::vector<std::size_t>{100, 1000}));
  EXPECT_EQ(grid.measures.cascade_levels, (std::vector<std::size_t>{1, kExhaust}));
  EXPECT_TRUE(grid.measures.twin_unique);
  SweepGrid again = sweep_grid_from_json(to_json(grid));
  EXPECT_EQ(to_json(again), to_json(grid));

  EXPECT_THROW(sweep_grid_from_json(nlohmann::json::parse(R"({"n":[10],"degrees":[2],"bogus":1})")),
               std::invalid_argument);
  EXPECT_THROW(sweep_grid_from_json(nlohmann::json::parse(R"({"n":[10],"degrees":[2],"levels":["soon"]})")),
               std::invalid_argument);
}

TEST(SweepCsv, FailedCellsPrintNan) {
  std::vector<SweepRow> rows{{ModelFamily::WS, 20, 3, "all", "", std::nan(""), std::nan(""), 0, "bad k"},
                             {ModelFamily::ER, 20, 2, "dk", "1", 0.5, 0.25, 3, ""}};
  std::ostringstream out;
  write_sweep_csv(out, rows);
  EXPECT_EQ(out.str(),
            "family,n,degree,measure,d_or_level,mean,std,reps\nWS,20,3,all,,nan,nan,0\nER,20,2,dk,1,0.500000,0.250000,3\n");
  auto j = to_json(std::span<const SweepRow>(rows));
  EXPECT_TRUE(j[0]["mean"].is_null());
  EXPECT_EQ(j[0]["error"], "bad k");
}

}  // namespace
}  // namespace dkanon
