#include <catgen/channel.hpp>
#include <catgen/conditional.hpp>
#include <catgen/fock.hpp>
#include <catgen/opo.hpp>
#include <catgen/single_mode.hpp>
#include <catgen/wigner.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

const auto params = catgen::opo::OpoParams::from_ratio(0.27);

void BM_squeeze_operator(benchmark::State& state) {
  const auto dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(catgen::fock::squeeze_operator(0.55, dim));
  }
}
BENCHMARK(BM_squeeze_operator)->Arg(40)->Arg(80);

void BM_cross_integral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(catgen::opo::f_delta(1.4, params));
  }
}
BENCHMARK(BM_cross_integral);

void BM_gain_integrals(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        catgen::channel::g_integrals(1.4, params, catgen::channel::Branch::plus));
  }
}
BENCHMARK(BM_gain_integrals);

void BM_wigner_point_fock(benchmark::State& state) {
  const auto rho = catgen::fock::DensityOperator::pure(
      catgen::fock::cat_state(std::sqrt(2.6), catgen::fock::Parity::even, 40));
  for (auto _ : state) {
    benchmark::DoNotOptimize(catgen::fock::wigner_point(rho, 0.7, -0.4));
  }
}
BENCHMARK(BM_wigner_point_fock);

void BM_wigner_closed_grid(benchmark::State& state) {
  const auto decomp = catgen::conditional::decompose(1.4, params);
  const auto channel =
      catgen::channel::make_channel(1.4, params, catgen::channel::Branch::plus);
  const auto axis = catgen::wigner::linspace(-6.0, 6.0, 121);
  for (auto _ : state) {
    benchmark::DoNotOptimize(catgen::wigner::w_plus_closed_grid(axis, axis, decomp, channel));
  }
}
BENCHMARK(BM_wigner_closed_grid);

void BM_fidelity_to_cat(benchmark::State& state) {
  const auto decomp = catgen::conditional::decompose(1.4, params);
  const auto channel =
      catgen::channel::make_channel(1.4, params, catgen::channel::Branch::plus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(catgen::wigner::fidelity_to_cat(decomp, channel, std::sqrt(2.6)));
  }
}
BENCHMARK(BM_fidelity_to_cat);

void BM_optimal_fidelity_point(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(catgen::single_mode::optimal_fidelity_point(
        std::sqrt(2.6), catgen::single_mode::Variant::psi2));
  }
}
BENCHMARK(BM_optimal_fidelity_point);

} // namespace

BENCHMARK_MAIN();
