#include <benchmark/benchmark.h>

#include <random>

#include "starconf/code_invariants.hpp"
#include "starconf/tutte.hpp"

using namespace starconf;

namespace {

ExactMatrix random_matrix(std::size_t k, std::size_t n, std::uint64_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const FieldSpec f = FieldSpec::prime_field(p);
  while (true) {
    std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(n));
    for (auto& row : rows)
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % p);
    ExactMatrix m = ExactMatrix::from_rows(f, rows);
    bool zero = false;
    for (std::size_t c = 0; c < n; ++c) zero = zero || m.column_is_zero(c);
    if (!zero && rref(m).rank == k) return m;
  }
}

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::parallel : Execution::serial; }

void BM_RankTally(benchmark::State& state) {
  const ExactMatrix m = random_matrix(4, static_cast<std::size_t>(state.range(0)), 5, 1);
  for (auto _ : state) {
    VectorMatroid fresh(m);
    benchmark::DoNotOptimize(rank_size_tally(fresh, mode(state)));
  }
}

void BM_RankPrecompute(benchmark::State& state) {
  const ExactMatrix m = random_matrix(4, static_cast<std::size_t>(state.range(0)), 3, 2);
  for (auto _ : state) {
    VectorMatroid fresh(m);
    fresh.precompute_ranks(mode(state));
    benchmark::DoNotOptimize(fresh.rank(fresh.ground()));
  }
}

void BM_GhwScan(benchmark::State& state) {
  const ExactMatrix m = random_matrix(4, static_cast<std::size_t>(state.range(0)), 2, 3);
  for (auto _ : state) {
    VectorMatroid fresh(m);
    benchmark::DoNotOptimize(hierarchy_bruteforce(fresh, mode(state)));
  }
}

void BM_DeletionContraction(benchmark::State& state) {
  const ExactMatrix m = random_matrix(4, static_cast<std::size_t>(state.range(0)), 5, 4);
  for (auto _ : state) {
    TutteMemo memo;
    benchmark::DoNotOptimize(tutte_deletion_contraction(VectorMatroid(m), {mode(state), &memo}));
  }
}

}  // namespace

BENCHMARK(BM_RankTally)->ArgsProduct({{12, 16, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankPrecompute)->ArgsProduct({{12, 16, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GhwScan)->ArgsProduct({{12, 16, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeletionContraction)->ArgsProduct({{12, 16, 20}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
