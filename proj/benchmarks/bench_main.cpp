#include <benchmark/benchmark.h>

#include "rovib/rovib.hpp"

namespace {

const rovib::PotentialParams& argon() {
  static const auto p = rovib::Registry::builtin().find("Ar2");
  return p;
}

const rovib::PotentialParams& hydrogen() {
  static const auto p = rovib::Registry::builtin().find("H2");
  return p;
}

void BM_NrEnergy(benchmark::State& state) {
  const auto ch = rovib::Channel::s_wave();
  int n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rovib::nr_energy(argon(), n, ch).value);
    n = (n + 1) % 7;
  }
}
BENCHMARK(BM_NrEnergy);

void BM_NrEnergyViaEngine(benchmark::State& state) {
  const auto ch = rovib::Channel::s_wave();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rovib::nr_energy_via_engine(argon(), 3, ch).value);
  }
}
BENCHMARK(BM_NrEnergyViaEngine);

void BM_SolveRelativistic(benchmark::State& state) {
  const auto ch = rovib::Channel::s_wave();
  auto w = rovib::ScanWindow::defaults(hydrogen());
  w.steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rovib::solve_relativistic(hydrogen(), 0, ch, w));
  }
}
BENCHMARK(BM_SolveRelativistic)->Arg(1000)->Arg(4000)->Unit(benchmark::kMicrosecond);

void BM_FdEigenvalues(benchmark::State& state) {
  auto grid = rovib::default_grid(argon());
  grid.points = static_cast<std::size_t>(state.range(0));
  const rovib::FdOptions opts{.count = 3, .richardson = false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rovib::fd_eigenvalues(argon(), rovib::Channel::s_wave(), true, grid, opts));
  }
}
BENCHMARK(BM_FdEigenvalues)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_MakeState(benchmark::State& state) {
  const auto lvl = rovib::nr_energy(hydrogen(), static_cast<int>(state.range(0)),
                                    rovib::Channel::s_wave());
  for (auto _ : state) benchmark::DoNotOptimize(rovib::make_state(lvl).log_norm);
}
BENCHMARK(BM_MakeState)->Arg(0)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_JacobiRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = -0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rovib::jacobi_poly(n, 15.2, 850.0, x));
    x = x > 0.9 ? -0.9 : x + 1e-3;
  }
}
BENCHMARK(BM_JacobiRecurrence)->Arg(2)->Arg(10)->Arg(40);

void BM_JacobiHypergeometric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = -0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rovib::jacobi_hypergeometric(n, 15.2, 850.0, x));
    x = x > 0.9 ? -0.9 : x + 1e-3;
  }
}
BENCHMARK(BM_JacobiHypergeometric)->Arg(2)->Arg(10)->Arg(40);

void BM_LnGamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rovib::ln_gamma(x).value);
    x = x > 100.0 ? 0.1 : x + 0.37;
  }
}
BENCHMARK(BM_LnGamma);

}  // namespace

BENCHMARK_MAIN();
