#include "esym/esp.hpp"
#include "esym/polyzero.hpp"
#include "esym/sampling.hpp"
#include "esym/symalg.hpp"

#include <benchmark/benchmark.h>

namespace {

std::vector<esym::ExactComplex> exact_inputs(std::size_t n) {
  esym::Sampler rng(42);
  return rng.gaussians(n, 9);
}

template <class T>
std::vector<T> converted(const std::vector<esym::ExactComplex>& xs) {
  std::vector<T> out;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<T, esym::Wrap64Complex>) {
      out.push_back(esym::to_wrap64(x));
    } else {
      out.push_back(esym::to_float(x));
    }
  }
  return out;
}

void BM_BuildTableExact(benchmark::State& state) {
  const auto xs = exact_inputs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(esym::build_table(xs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTableExact)->RangeMultiplier(2)->Range(4, 256)->Complexity(benchmark::oNSquared);

void BM_BuildTableWrap64(benchmark::State& state) {
  const auto xs = converted<esym::Wrap64Complex>(exact_inputs(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(esym::build_table(xs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTableWrap64)->RangeMultiplier(2)->Range(4, 1024)->Complexity(benchmark::oNSquared);

void BM_BuildTableFloat(benchmark::State& state) {
  const auto xs = converted<esym::FloatComplex>(exact_inputs(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(esym::build_table(xs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTableFloat)->RangeMultiplier(2)->Range(4, 1024)->Complexity(benchmark::oNSquared);

// Every k through the subset-expansion oracle: 2^n products in total.
void BM_DirectEpsAllK(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto xs = exact_inputs(n);
  for (auto _ : state) {
    for (std::size_t k = 1; k <= n; ++k) benchmark::DoNotOptimize(esym::direct_eps(xs, k));
  }
}
BENCHMARK(BM_DirectEpsAllK)->DenseRange(4, 16, 4);

void BM_FromRootsExact(benchmark::State& state) {
  const auto roots = exact_inputs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(esym::from_roots(roots));
}
BENCHMARK(BM_FromRootsExact)->RangeMultiplier(4)->Range(4, 256);

void BM_EmbedPower(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  esym::GenPoly p = esym::GenPoly::constant(n, esym::ExactComplex::one());
  for (std::size_t k = 1; k <= n; ++k) p = p * esym::GenPoly::generator(n, k);
  for (auto _ : state) benchmark::DoNotOptimize(esym::embed(p));
}
BENCHMARK(BM_EmbedPower)->DenseRange(2, 8, 2);

}  // namespace
BENCHMARK_MAIN();
