#include <benchmark/benchmark.h>

#include <vector>

#include "etmof/metrics.hpp"
#include "etmof/optimizer.hpp"
#include "etmof/pareto.hpp"
#include "etmof/rng.hpp"
#include "etmof/suite.hpp"
#include "etmof/transform.hpp"

namespace {

using namespace etmof;

void BM_EvaluateLinkageTask(benchmark::State& state) {
  const MultiTaskProblem problem = instantiate(1);
  SplitMix64 rng(1);
  std::vector<double> x(50);
  for (double& v : x) v = rng.next_in(-1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(problem.evaluate(1, x));
  }
}
BENCHMARK(BM_EvaluateLinkageTask);

void BM_EvaluateLargeScaleTask(benchmark::State& state) {
  const MultiTaskProblem problem = instantiate(24);
  SplitMix64 rng(2);
  std::vector<double> x(10000);
  for (double& v : x) v = rng.next_in(-1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(problem.evaluate(2, x));
  }
}
BENCHMARK(BM_EvaluateLargeScaleTask);

void BM_RotationApply(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const TransformBundle b = make_transform(TransformKind::Rotation, 5, dim, -1, 1);
  SplitMix64 rng(3);
  std::vector<double> x(static_cast<std::size_t>(dim));
  for (double& v : x) v = rng.next_in(-1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(b.apply(x));
  }
}
BENCHMARK(BM_RotationApply)->Arg(16)->Arg(49);

void BM_Igd(benchmark::State& state) {
  const ReferenceFront ref = sample_reference_front(Shape::H1, 2, 1000);
  SplitMix64 rng(4);
  std::vector<Objectives> s;
  for (int i = 0; i < 100; ++i) s.push_back({rng.next_double(), rng.next_double()});
  for (auto _ : state) {
    benchmark::DoNotOptimize(igd(s, ref));
  }
}
BENCHMARK(BM_Igd);

void BM_NondominatedRanks(benchmark::State& state) {
  SplitMix64 rng(5);
  std::vector<Objectives> pts;
  for (int i = 0; i < 200; ++i) {
    pts.push_back({rng.next_double(), rng.next_double(), rng.next_double()});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(nondominated_ranks(pts));
  }
}
BENCHMARK(BM_NondominatedRanks);

void BM_SolverGeneration(benchmark::State& state) {
  // Whole small run: init + nine offspring generations on the first instance.
  for (auto _ : state) {
    SolverConfig cfg;
    cfg.population = 20;
    cfg.seed = 6;
    cfg.budget_per_task = 200;
    benchmark::DoNotOptimize(run_solver(instantiate(1), cfg, SolverMode::Transfer));
  }
}
BENCHMARK(BM_SolverGeneration);

} // namespace

BENCHMARK_MAIN();
