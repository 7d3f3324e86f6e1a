// Serial reference vs OpenMP paths of the hot loops.

#include <benchmark/benchmark.h>

#include <cmath>

#include "hk/group_kernels.hpp"
#include "hk/quad.hpp"
#include "hk/validate.hpp"

using namespace hk;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_Grid(benchmark::State& state) {
  const GridSpec grid{Group::SL2R, {Method::Main, Method::Subelliptic}, {1.0}, {0.0, 0.5, 1.0, 2.0},
                      {0.0, M_PI / 2, M_PI, 2 * M_PI}};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid(grid, {}, exec_of(state)));
}
BENCHMARK(BM_Grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Su2Rule(benchmark::State& state) {
  const Su2Integrand f = [](const Mat2& k) { return std::exp(k.a.real()) * std::norm(k.b); };
  for (auto _ : state) benchmark::DoNotOptimize(su2_rule_sum(f, Su2Rule{64, 64, 128}, exec_of(state)));
}
BENCHMARK(BM_Su2Rule)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sl2cKernel(benchmark::State& state) {
  KernelOptions ko;
  ko.exec = exec_of(state);
  const GroupElement g{torus(0.3) * a_half(0.8), Group::SL2C};
  for (auto _ : state) benchmark::DoNotOptimize(rho_sl2c(1.0, g, ko));
}
BENCHMARK(BM_Sl2cKernel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Brownian(benchmark::State& state) {
  McConfig cfg;
  cfg.n_paths = 10000;
  cfg.n_steps = 200;
  for (auto _ : state) benchmark::DoNotOptimize(mc_brownian(Group::SL2R, 1.0, cfg, exec_of(state)));
}
BENCHMARK(BM_Brownian)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
