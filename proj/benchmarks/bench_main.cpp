#include <benchmark/benchmark.h>

#include "permrep/classify.hpp"
#include "permrep/explore.hpp"
#include "permrep/rewrite.hpp"

namespace {

using namespace permrep;

const Permutation& sample_perm_10() {
  static const Permutation p({3, 10, 1, 7, 5, 9, 2, 8, 4, 6});
  return p;
}

void BM_ForwardSites(benchmark::State& state) {
  const Rule r = Rule::from_beta_text("3*2");
  for (auto _ : state) benchmark::DoNotOptimize(forward_sites(sample_perm_10(), r));
}
BENCHMARK(BM_ForwardSites);

void BM_BackwardMoves(benchmark::State& state) {
  const Rule r = Rule::from_beta_text("3*2");
  for (auto _ : state) benchmark::DoNotOptimize(backward_moves(sample_perm_10(), r));
}
BENCHMARK(BM_BackwardMoves);

void BM_Neighbors(benchmark::State& state) {
  const Rule r = Rule::from_beta_text("13*");
  for (auto _ : state) benchmark::DoNotOptimize(neighbors(sample_perm_10(), r));
}
BENCHMARK(BM_Neighbors);

void BM_RankUnrank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint32_t count =
      static_cast<std::uint32_t>(permutation_count(n) - permutation_count(n - 1));
  std::uint32_t rank = 12345 % count;
  for (auto _ : state) {
    const Permutation p = perm_unrank(n, rank);
    rank = (perm_rank(p) + 1) % count;
    benchmark::DoNotOptimize(rank);
  }
}
BENCHMARK(BM_RankUnrank)->Arg(8)->Arg(10);

void BM_Primitive(benchmark::State& state) {
  const Rule r = Rule::from_beta_text("12*");
  for (auto _ : state) benchmark::DoNotOptimize(primitive(sample_perm_10(), r));
}
BENCHMARK(BM_Primitive);

void BM_ComputePartition(benchmark::State& state) {
  const Rule r = all_rules()[static_cast<std::size_t>(state.range(0))];
  const int max_len = static_cast<int>(state.range(1));
  const int slack = static_cast<int>(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_partition(r, max_len, slack, false, 1));
}
BENCHMARK(BM_ComputePartition)
    ->Args({0, 4, 3})    // a decreasing rule at ceiling 7
    ->Args({9, 5, 0})    // a drop-only rule at ceiling 5
    ->Args({14, 5, 2});  // a switch rule at ceiling 7

void BM_IdentityWitnesses(benchmark::State& state) {
  const Rule r = Rule::from_beta_text("3*2");
  for (auto _ : state) benchmark::DoNotOptimize(identity_witnesses(r, 4, 3));
}
BENCHMARK(BM_IdentityWitnesses);

}  // namespace

BENCHMARK_MAIN();
