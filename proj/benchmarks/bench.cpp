#include <benchmark/benchmark.h>

#include "tvsum/hqft.hpp"
#include "tvsum/oracle.hpp"
#include "tvsum/statesum.hpp"

using namespace tvsum;

namespace {

const std::string kData = TVSUM_DATA_DIR;

GFusionData cat(const std::string& n) { return load_category(kData + "/categories/" + n + ".json"); }
Triangulation tri(const std::string& n) { return load_triangulation(kData + "/triangulations/" + n + ".tri"); }

void BM_EvaluateTetrahedron(benchmark::State& state) {
  const auto d = cat(state.range(0) ? "ising_like" : "fibonacci");
  auto g = parse_graph(R"({"vertices":4,"edges":[[0,1,1],[0,2,1],[0,3,1],[1,2,1],[2,3,1],[3,1,1]],
    "rotation":[[[0,"t"],[1,"t"],[2,"t"]],[[3,"t"],[0,"h"],[5,"h"]],[[4,"t"],[1,"h"],[3,"h"]],[[5,"t"],[2,"h"],[4,"h"]]]})");
  if (state.range(0)) {
    for (auto& e : g.edges) e.color = 2;  // sigma
    g.edges[1].color = g.edges[5].color = 1;  // psi on two opposite edges
  }
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_graph(d, g));
}
BENCHMARK(BM_EvaluateTetrahedron)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_ClosedInvariantFibonacci(benchmark::State& state) {
  const auto d = cat("fibonacci");
  const auto s = dual_skeleton(tri(state.range(0) ? "s3_5tet" : "s3_2tet"));
  const GLabeling l(s.num_regions(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(closed_invariant(s, l, d, {1}));
}
BENCHMARK(BM_ClosedInvariantFibonacci)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PartitionPointed(benchmark::State& state) {
  const auto d = cat("vect_Z3_theta1");
  const auto s = dual_skeleton(tri(state.range(0) ? "t3_6tet" : "l31"));
  for (auto _ : state) benchmark::DoNotOptimize(partition_all_classes(s, d, {1}));
}
BENCHMARK(BM_PartitionPointed)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DijkgraafWitten(benchmark::State& state) {
  const auto t = order_triangulation(tri(state.range(0) ? "t3_6tet" : "l31"));
  const auto theta = CocycleTable::standard_cyclic(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dw_partition(t, theta));
}
BENCHMARK(BM_DijkgraafWitten)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TorusProjector(benchmark::State& state) {
  const auto d = cat(state.range(0) ? "fibonacci" : "vect_Z2_theta1");
  const auto a = load_surface(kData + "/surfaces/torus_two_loop.json");
  for (auto _ : state) benchmark::DoNotOptimize(cylinder_projector(a, d, {1}));
}
BENCHMARK(BM_TorusProjector)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
