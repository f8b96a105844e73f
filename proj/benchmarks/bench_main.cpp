#include <benchmark/benchmark.h>

#include <numeric>

#include "dkanon/canonical.hpp"
#include "dkanon/cascade.hpp"
#include "dkanon/equivalence.hpp"
#include "dkanon/models.hpp"
#include "dkanon/neighborhood.hpp"
#include "dkanon/twins.hpp"

namespace {

using namespace dkanon;

Graph model(ModelFamily f, std::size_t n, double degree) { return generate(ModelSpec{f, n, degree, 0.5, 1}).graph; }

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph hypercube(int dim) {
  std::vector<Edge> e;
  for (NodeId v = 0; v < (1u << dim); ++v)
    for (int b = 0; b < dim; ++b)
      if (v < (v ^ (1u << b))) e.emplace_back(v, v ^ (1u << b));
  return Graph::from_edges(std::size_t{1} << dim, e);
}

void BM_CertificateStar(benchmark::State& state) {
  Graph g = star(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_certificate(g, 0));
}
BENCHMARK(BM_CertificateStar)->Arg(100)->Arg(1000)->Arg(10000);

void BM_CertificateHypercube(benchmark::State& state) {
  Graph g = hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_certificate(g, 0));
}
BENCHMARK(BM_CertificateHypercube)->Arg(6)->Arg(8)->Arg(10);

void BM_CertificateBaHubView(benchmark::State& state) {
  Graph g = model(ModelFamily::BA, 20000, 3);
  NeighborhoodView view = closed_neighborhood(g, 0, static_cast<std::size_t>(state.range(0)));
  state.counters["view_nodes"] = static_cast<double>(view.size());
  for (auto _ : state) benchmark::DoNotOptimize(canonical_certificate(view));
}
BENCHMARK(BM_CertificateBaHubView)->Arg(1)->Arg(2);

void BM_Partition(benchmark::State& state) {
  const auto family = static_cast<ModelFamily>(state.range(0));
  const double degree = family == ModelFamily::BA ? 3 : 6;
  Graph g = model(family, 10000, degree);
  const auto d = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(partition(g, d));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * g.node_count()));
}
BENCHMARK(BM_Partition)->ArgsProduct({{0, 1, 2}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_CascadeExhaust(benchmark::State& state) {
  Graph g = model(ModelFamily::BA, static_cast<std::size_t>(state.range(0)), 5);
  EquivalencePartition p1 = partition(g, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cascade(g, p1));
}
BENCHMARK(BM_CascadeExhaust)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_FindTwins(benchmark::State& state) {
  Graph g = model(ModelFamily::BA, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_twins(g));
}
BENCHMARK(BM_FindTwins)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
