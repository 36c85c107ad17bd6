#include <benchmark/benchmark.h>

#include <random>

#include "heisenhom/algebra.hpp"
#include "heisenhom/heisenberg.hpp"
#include "heisenhom/linalg.hpp"
#include "heisenhom/morse.hpp"

using namespace heisenhom;

namespace {

void fill_random(std::size_t size, BitMatrix& bits, DenseMatrixGFp& dense) {
  std::mt19937_64 rng(size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const bool v = (rng() & 1u) != 0;
      bits.set(r, c, v);
      dense.set(r, c, v ? 1 : 0);
    }
  }
}

void BM_RankPacked(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  BitMatrix bits(size, size);
  DenseMatrixGFp dense(FieldChar(2), size, size);
  fill_random(size, bits, dense);
  for (auto _ : state) benchmark::DoNotOptimize(rank_gf2(bits));
}
BENCHMARK(BM_RankPacked)->RangeMultiplier(2)->Range(64, 1024);

void BM_RankDense(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  BitMatrix bits(size, size);
  DenseMatrixGFp dense(FieldChar(2), size, size);
  fill_random(size, bits, dense);
  for (auto _ : state) benchmark::DoNotOptimize(rank(dense));
}
BENCHMARK(BM_RankDense)->RangeMultiplier(2)->Range(64, 512);

void BM_BettiRank(benchmark::State& state) {
  const auto alg = heisenberg_algebra(static_cast<std::size_t>(state.range(0)));
  const FieldChar field(static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(alg, field));
}
BENCHMARK(BM_BettiRank)
    ->ArgsProduct({{4, 6, 8, 10}, {2, 1009}})
    ->Unit(benchmark::kMillisecond);

void BM_MorseBetti(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = build_digraph(heisenberg_algebra(n), FieldChar(1009));
  const auto m = heisenberg::heisenberg_matching(n);
  for (auto _ : state) benchmark::DoNotOptimize(morse_betti_numbers(g, m));
}
BENCHMARK(BM_MorseBetti)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_GeneratingFunction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(heisenberg::betti_generating_function(n));
}
BENCHMARK(BM_GeneratingFunction)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
