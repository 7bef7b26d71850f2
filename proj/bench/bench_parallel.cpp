// Serial reference vs OpenMP kernels on fixed graphs.
#include <benchmark/benchmark.h>

#include "otoric/circuit_engine.hpp"
#include "otoric/fixtures.hpp"
#include "otoric/graph.hpp"
#include "otoric/oracle.hpp"

namespace {

using namespace otoric;

// Two theta graphs joined by a path plus a balanced square: many supports,
// a non-trivial subset lattice.
WeightedOrientedGraph busy_graph() {
  return WeightedOrientedGraph::from_ids(
      {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 1}, {"e", 2}, {"f", 1}, {"g", 3}, {"h", 1}, {"i", 2}},
      {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "a"}, {"e4", "b", "d"}, {"e5", "d", "a"},
       {"e6", "c", "e"}, {"e7", "e", "f"}, {"e8", "f", "g"}, {"e9", "g", "e"}, {"e10", "f", "h"},
       {"e11", "h", "i"}, {"e12", "i", "g"}});
}

const WeightedOrientedGraph& theta() {
  static const WeightedOrientedGraph g = parse_graph(*fixture_document("theta"));
  return g;
}

void BM_BruteForceSerial(benchmark::State& s) {
  const IntMatrix a = incidence_matrix(busy_graph());
  for (auto _ : s) benchmark::DoNotOptimize(circuits_brute_force_serial(a));
}
void BM_BruteForceParallel(benchmark::State& s) {
  const IntMatrix a = incidence_matrix(busy_graph());
  for (auto _ : s) benchmark::DoNotOptimize(circuits_brute_force(a));
}

void BM_GraverSerial(benchmark::State& s) {
  const IntMatrix a = incidence_matrix(theta());
  const OracleBudget b{static_cast<std::int64_t>(s.range(0)), 12, 100'000'000};
  for (auto _ : s) benchmark::DoNotOptimize(graver_small_serial(a, b));
}
void BM_GraverParallel(benchmark::State& s) {
  const IntMatrix a = incidence_matrix(theta());
  const OracleBudget b{static_cast<std::int64_t>(s.range(0)), 12, 100'000'000};
  for (auto _ : s) benchmark::DoNotOptimize(graver_small(a, b));
}

void BM_CircuitsSerial(benchmark::State& s) {
  const auto g = busy_graph();
  for (auto _ : s) benchmark::DoNotOptimize(circuits_serial(g));
}
void BM_CircuitsParallel(benchmark::State& s) {
  const auto g = busy_graph();
  for (auto _ : s) benchmark::DoNotOptimize(circuits(g));
}

} // namespace

BENCHMARK(BM_BruteForceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GraverSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GraverParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CircuitsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CircuitsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
