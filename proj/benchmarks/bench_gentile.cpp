#include <benchmark/benchmark.h>

#include "gentile/algebra.hpp"
#include "gentile/ensemble.hpp"
#include "gentile/normal_order.hpp"
#include "gentile/parser.hpp"
#include "gentile/statistics.hpp"

namespace {

using namespace gentile;

void BM_VerifyRelations(benchmark::State& state) {
  const AlgebraOrder order(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = verify_relations(order, 1e-12);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyRelations)->Arg(4)->Arg(16)->Arg(64);

void BM_OccupancyDirect(benchmark::State& state) {
  const AlgebraOrder order(static_cast<int>(state.range(0)));
  double x = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(occupancy_direct(x, order));
    x = x < 10.0 ? x + 0.1 : -10.0;
  }
}
BENCHMARK(BM_OccupancyDirect)->Arg(4)->Arg(50)->Arg(500);

void BM_OccupancyClosed(benchmark::State& state) {
  const AlgebraOrder order(static_cast<int>(state.range(0)));
  double x = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(occupancy_closed(x, order));
    x = x < 10.0 ? x + 0.1 : -10.0;
  }
}
BENCHMARK(BM_OccupancyClosed)->Arg(4)->Arg(50)->Arg(500);

void BM_NormalOrder(benchmark::State& state) {
  const AlgebraOrder order(static_cast<int>(state.range(0)));
  const ExprPtr expr = parse("[e, e+]^2 {e, e+ e} - 5/3 e+^2 e^2 e+ e");
  for (auto _ : state) {
    auto nf = normal_order(expr, order);
    benchmark::DoNotOptimize(nf);
  }
}
BENCHMARK(BM_NormalOrder)->Arg(3)->Arg(8)->Arg(18);

void BM_SolveEnsemble(benchmark::State& state) {
  LevelSystem sys;
  sys.levels = {{0.0, 2}, {1.0, 2}, {2.0, 2}};
  const AlgebraOrder order(3);
  for (auto _ : state) {
    auto sol = solve_ensemble(sys, 4.0, 3.0, order, 1e-10);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveEnsemble);

}  // namespace

BENCHMARK_MAIN();
