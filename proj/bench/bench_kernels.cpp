// Serial reference against the OpenMP path for the sampling kernels.
// Argument 0 runs the serial path, 1 the parallel one.

#include <benchmark/benchmark.h>

#include <cmath>

#include "nullsl2/cli.hpp"
#include "nullsl2/kernels.hpp"
#include "nullsl2/periods.hpp"

using namespace nullsl2;

namespace {

kernels::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Exec::serial : kernels::Exec::parallel;
}

std::vector<cplx> annulus(int n) {
  std::vector<cplx> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pts.push_back(std::polar(0.2 + 0.7 * (k % 97) / 97.0, 0.37 * k));
  return pts;
}

void evaluate_curve(benchmark::State& state) {
  const SL2NullCurve F = end_model({3, 0.0});
  const auto pts = annulus(1 << 16);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_curve(F, pts, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}

void weighted_sum(benchmark::State& state) {
  const MeroFunction z = MeroFunction::z();
  const MeroFunction f = (1 + z * z * z) / (z * z * (z - 3));
  const Quadrature q = quadrature(Cycle::circle(0.0, 1.0, 1, 1 << 16));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weighted_sum(f, q.points, q.weights, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(q.points.size()));
}

void min_sup_norm(benchmark::State& state) {
  const SL2NullCurve F = end_model({1, 0.0});
  const auto pts = circle_samples(0.0, 0.5, 1 << 16);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::min_sup_norm(F, pts, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}

void build_mesh(benchmark::State& state) {
  const SL2NullCurve F = end_model({2, 0.0});
  const cli::Grid g{128, 256, 0.2, 0.8, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(cli::build_mesh(F, g, cli::Target::h3, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * g.radial * g.angular);
}

}  // namespace

BENCHMARK(evaluate_curve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(weighted_sum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(min_sup_norm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(build_mesh)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
