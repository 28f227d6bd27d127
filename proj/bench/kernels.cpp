// Serial reference vs OpenMP for the parallel kernels.

#include <benchmark/benchmark.h>

#include "galoisjd/galois.hpp"
#include "galoisjd/labels.hpp"
#include "galoisjd/oracle/bfs.hpp"
#include "galoisjd/oracle/gl2.hpp"

using namespace galoisjd;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_GaloisPermutation(benchmark::State& state) {
  const auto T = oracle::GL2Table::get(static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::galois_permutation(*T, exec_of(state)));
}

void BM_MainTheorem(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(1));
  oracle::GL2Table::get(q);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::verify_main_theorem_all(q, exec_of(state)));
}

void BM_Exponent(benchmark::State& state) {
  const auto G = oracle::MatrixGroup::symplectic(2, 3);
  const auto elems = oracle::bfs_closure(G);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::exponent_of(G, elems, exec_of(state)));
}

void BM_Orbits(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(1));
  const auto q = static_cast<std::uint64_t>(state.range(2));
  galois::Action::get(n, q);
  for (auto _ : state) benchmark::DoNotOptimize(galois::galois_orbits(n, q, exec_of(state)));
}

void BM_DegreeSquareSum(benchmark::State& state) {
  const auto chars = labels::enumerate_characters(static_cast<int>(state.range(1)),
                                                  static_cast<std::uint64_t>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(labels::degree_square_sum(chars, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_GaloisPermutation)->ArgsProduct({{0, 1}, {7, 9}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MainTheorem)->ArgsProduct({{0, 1}, {7, 9}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Exponent)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Orbits)->Args({0, 3, 4})->Args({1, 3, 4})->Args({0, 4, 3})->Args({1, 4, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DegreeSquareSum)->Args({0, 4, 3})->Args({1, 4, 3})->Args({0, 5, 2})->Args({1, 5, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
