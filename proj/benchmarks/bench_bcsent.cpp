#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "bcsent/concurrence.hpp"
#include "bcsent/fock_oracle.hpp"
#include "bcsent/gap_solver.hpp"

using namespace bcsent;

namespace {

std::vector<double> energies(std::size_t n) {
  std::vector<double> eps(n);
  for (std::size_t i = 0; i < n; ++i) eps[i] = -1.0 + 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return eps;
}

void BM_ClosedForm(benchmark::State& state) {
  const DimensionlessPair p(0.8, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_closed_form(p));
}
BENCHMARK(BM_ClosedForm);

void BM_Quadrature(benchmark::State& state) {
  const DimensionlessPair p(std::pow(10.0, static_cast<double>(state.range(0))), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(log_concurrence_quadrature(p));
}
BENCHMARK(BM_Quadrature)->DenseRange(-2, 2);

void BM_DiscreteProduct(benchmark::State& state) {
  const auto amps = bcs_amplitudes(energies(static_cast<std::size_t>(state.range(0))), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_discrete(amps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DiscreteProduct)->RangeMultiplier(8)->Range(8, 1 << 18);

void BM_FockOverlap(benchmark::State& state) {
  const auto amps = bcs_amplitudes(energies(static_cast<std::size_t>(state.range(0))), 0.1);
  std::vector<double> u, v;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    u.push_back(std::sqrt(amps.u2()[k]));
    v.push_back(std::sqrt(amps.v2()[k]));
  }
  for (auto _ : state) benchmark::DoNotOptimize(overlap(build_bcs_state(u, v), time_reverse(u, v)));
}
BENCHMARK(BM_FockOverlap)->DenseRange(4, 16, 4);

void BM_SolveGap(benchmark::State& state) {
  const double lambda = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_gap(lambda, 1.0));
}
BENCHMARK(BM_SolveGap)->Arg(5)->Arg(30)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
