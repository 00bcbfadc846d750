#include <benchmark/benchmark.h>

#include <random>

#include "sk1/arith.hpp"
#include "sk1/genetic.hpp"
#include "sk1/metacyclic.hpp"
#include "sk1/sk1_abelian.hpp"
#include "sk1/snf.hpp"

namespace {

using namespace sk1;

AbelianPGroup square(int n) {
  const auto o = checked_pow(3, n);
  return make_group(3, {o, o});
}

void BM_GeneticBasis(benchmark::State& state) {
  const auto g = square(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(genetic_basis_abelian(g));
}
BENCHMARK(BM_GeneticBasis)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_Sk1Square(benchmark::State& state) {
  const auto g = square(static_cast<int>(state.range(0)));
  PipelineOptions o;
  o.route = state.range(1) == 0 ? SnfRoute::Local : SnfRoute::Exact;
  for (auto _ : state) benchmark::DoNotOptimize(sk1::sk1(g, o));
}
BENCHMARK(BM_Sk1Square)
    ->ArgsProduct({{2, 3, 4, 5}, {0}})
    ->Args({6, 0})
    ->ArgsProduct({{2, 3, 4}, {1}})
    ->ArgNames({"n", "exact"})
    ->Unit(benchmark::kMillisecond);

void BM_Sk1Metacyclic(benchmark::State& state) {
  const auto g = make_metacyclic(state.range(0), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sk1_metacyclic(g));
}
BENCHMARK(BM_Sk1Metacyclic)
    ->Args({3, 4})
    ->Args({3, 6})
    ->Args({5, 4})
    ->ArgNames({"p", "n"})
    ->Unit(benchmark::kMillisecond);

void BM_SmithDivisorsRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = dist(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_divisors(m));
}
BENCHMARK(BM_SmithDivisorsRandom)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
