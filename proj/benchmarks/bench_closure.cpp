#include <benchmark/benchmark.h>

#include "drgkit/drgkit.hpp"

namespace {

using namespace drgkit;

const std::vector<FamilySpec>& graphs() {
  static const std::vector<FamilySpec> specs = {
      {Family::shrikhande, {}}, {Family::chang, {2}}, {Family::johnson, {8, 4}}, {Family::halved_cube, {8}}};
  return specs;
}

void BM_BlockClosure(benchmark::State& state) {
  const Graph g = construct(graphs()[state.range(0)]);
  const DistanceData dd = distances(g);
  for (auto _ : state) benchmark::DoNotOptimize(terwilliger_closure(g, 0, dd).dim);
  state.SetLabel(g.label());
}
BENCHMARK(BM_BlockClosure)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_GenericClosure(benchmark::State& state) {
  const Graph g = construct(graphs()[state.range(0)]);
  const DistanceData dd = distances(g);
  const auto gens = terwilliger_generators(g, 0, dd);
  for (auto _ : state) benchmark::DoNotOptimize(algebra_closure(gens).dim);
  state.SetLabel(g.label());
}
BENCHMARK(BM_GenericClosure)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const Graph g = construct(graphs()[state.range(0)]);
  const DistanceData dd = distances(g);
  const DrgParameters p = verify_drg(g, dd);
  const EigenData ed = eigen_data(dd, p, false, false);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_vertex(g, dd, p, ed.theta, 0));
  state.SetLabel(g.label());
}
BENCHMARK(BM_Decompose)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_GraphSpectrum(benchmark::State& state) {
  const Graph g = construct(graphs()[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(graph_spectrum(g).size());
  state.SetLabel(g.label());
}
BENCHMARK(BM_GraphSpectrum)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
