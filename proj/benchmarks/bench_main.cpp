#include <benchmark/benchmark.h>

#include <vector>

#include "permclass/bounded_class.hpp"
#include "permclass/enumeration.hpp"
#include "permclass/monotone.hpp"

using namespace permclass;

namespace {

const std::vector<Permutation> kFibBasis{Permutation{3, 1, 2}, Permutation{3, 2, 1}, Permutation{2, 3, 1}};

// 2 1 2 1 ... 1: a Fibonacci-class member of length n.
Permutation fib_member(std::size_t n) {
  Word w(n, 1);
  for (std::size_t i = 0; i + 1 < n; i += 2) w[i] = 2;
  return rank_decode(w);
}

void BM_Member(benchmark::State& state) {
  const BoundedClass fib = closed_from_basis(kFibBasis, 2);
  const Permutation p = fib_member(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(member(fib, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Member)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

void BM_RankEncode(benchmark::State& state) {
  const Permutation p = fib_member(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank_encode(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankEncode)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN);

// Av(321) inside Omega_k.
void BM_ClosedFromBasis(benchmark::State& state) {
  const std::vector<Permutation> basis{Permutation{3, 2, 1}};
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_from_basis(basis, k));
}
BENCHMARK(BM_ClosedFromBasis)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_BasisFromClosed(benchmark::State& state) {
  const std::vector<Permutation> basis{Permutation{3, 2, 1}, Permutation{2, 4, 1, 3}};
  const BoundedClass x = closed_from_basis(basis, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(basis_from_closed(x));
}
BENCHMARK(BM_BasisFromClosed)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_GeneratingFunction(benchmark::State& state) {
  const std::vector<Permutation> basis{Permutation{3, 2, 1}};
  const BoundedClass x = closed_from_basis(basis, static_cast<int>(state.range(0)));
  state.counters["states"] = x.acceptor().state_count();
  for (auto _ : state) benchmark::DoNotOptimize(generating_function(x.acceptor()));
}
BENCHMARK(BM_GeneratingFunction)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_GfMonotone(benchmark::State& state) {
  const SignSequence phi(state.range(0) == 2 ? "+-" : state.range(0) == 3 ? "+-+" : "+-+-");
  const std::vector<Permutation> basis{Permutation{3, 2, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(gf_monotone(phi, basis));
}
BENCHMARK(BM_GfMonotone)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
