// Microbenchmarks for the hot paths: witness assembly, exact rank (modular
// prescreen and fraction-free elimination), end-to-end certification, and
// one ALS fit.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "perfectrank/certify.hpp"
#include "perfectrank/exact.hpp"
#include "perfectrank/format.hpp"
#include "perfectrank/jacobian.hpp"
#include "perfectrank/probe.hpp"
#include "perfectrank/tensor.hpp"
#include "perfectrank/witness.hpp"

namespace {

using namespace perfectrank;

Format format_arg(const benchmark::State& state) {
  switch (state.range(0)) {
    case 0:
      return Format{{2, 2, 3}};
    case 1:
      return Format{{3, 3, 5}};
    case 2:
      return Format{{3, 4, 9}};
    default:
      return Format{{4, 4, 10}};
  }
}

IntMatrix witness_matrix(const Format& f) {
  return witness_jacobian(build_witness(f));
}

/// A square matrix that defeats the full-rank prescreen, forcing the
/// fraction-free elimination path.
IntMatrix deficient_matrix(std::int64_t n) {
  std::mt19937_64 eng(99);
  IntMatrix m(n, n);
  for (std::int64_t i = 0; i + 1 < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      m.at(i, j) = static_cast<long>(eng() % 19) - 9;
  for (std::int64_t j = 0; j < n; ++j)
    m.at(n - 1, j) = m.at(0, j) + m.at(1, j);
  return m;
}

void BM_BuildWitness(benchmark::State& state) {
  const Format f = format_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(build_witness(f));
}

void BM_WitnessJacobian(benchmark::State& state) {
  const Format f = format_arg(state);
  const WitnessPoint w = build_witness(f);
  for (auto _ : state) benchmark::DoNotOptimize(witness_jacobian(w));
}

void BM_RankModP(benchmark::State& state) {
  const IntMatrix m = witness_matrix(format_arg(state));
  for (auto _ : state)
    benchmark::DoNotOptimize(rank_mod_p(m, kPrescreenPrimes[0]));
}

void BM_RankExactPrescreenHit(benchmark::State& state) {
  const IntMatrix m = witness_matrix(format_arg(state));
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}

void BM_RankExactBareiss(benchmark::State& state) {
  const IntMatrix m = deficient_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}

void BM_CertifyPerfect(benchmark::State& state) {
  const Format f = format_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(certify_perfect(f));
}

void BM_MatrixDigest(benchmark::State& state) {
  const IntMatrix m = witness_matrix(format_arg(state));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_digest(m));
}

void BM_AlsFit(benchmark::State& state) {
  std::mt19937_64 eng(7);
  DenseTensor<double> t({2, 2, 3});
  for (auto& v : t.values())
    v = static_cast<double>(static_cast<std::int64_t>(eng() % 19)) - 9.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(als_fit(t, 3, 200, 1e-8, 42));
}

BENCHMARK(BM_BuildWitness)->DenseRange(0, 3);
BENCHMARK(BM_WitnessJacobian)->DenseRange(0, 3);
BENCHMARK(BM_RankModP)->DenseRange(0, 3);
BENCHMARK(BM_RankExactPrescreenHit)->DenseRange(0, 3);
BENCHMARK(BM_RankExactBareiss)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_CertifyPerfect)->DenseRange(0, 3);
BENCHMARK(BM_MatrixDigest)->DenseRange(0, 3);
BENCHMARK(BM_AlsFit);

}  // namespace

BENCHMARK_MAIN();
