// Microbenchmarks for the prime-scan kernels and the symbolic layer.
//
//   cmake --build build && ./build/benchmarks/lacunarity_bench

#include <benchmark/benchmark.h>

#include "lacunarity/bounds/bounds.hpp"
#include "lacunarity/density/density.hpp"
#include "lacunarity/satake/decompose.hpp"
#include "lacunarity/sources/artin_q8.hpp"
#include "lacunarity/sources/chebotarev.hpp"
#include "lacunarity/sources/dirichlet_char.hpp"
#include "lacunarity/sources/elliptic.hpp"
#include "lacunarity/sources/primes.hpp"

using namespace lacunarity;

static void BM_PrimeSieve(benchmark::State& state) {
  const std::int64_t limit = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sources::prime_sieve(limit));
  state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_PrimeSieve)->Arg(100000)->Arg(1000000);

static void BM_ECTrace(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  const sources::EllipticCurveSource curve{0, -1, 1, 0, 0};  // conductor 11
  for (auto _ : state) benchmark::DoNotOptimize(sources::ec_trace(curve, p));
  state.SetItemsProcessed(state.iterations() * p);
}
BENCHMARK(BM_ECTrace)->Arg(10007)->Arg(100003)->Arg(999983);

static void BM_Q8Frobenius(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  const auto src = sources::ArtinQ8Source::default_source();
  for (auto _ : state) benchmark::DoNotOptimize(sources::q8_frobenius_at(src, p));
}
BENCHMARK(BM_Q8Frobenius)->Arg(10007)->Arg(100003)->Arg(999983);

static void BM_KroneckerScan(benchmark::State& state) {
  const auto primes = sources::prime_sieve(state.range(0));
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (auto p : primes) acc += sources::kronecker_symbol(p, 997);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(primes.size()));
}
BENCHMARK(BM_KroneckerScan)->Arg(1000000);

static void BM_TensorPowerDecompose(benchmark::State& state) {
  const auto type = satake::GL2Type::non_solvable();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(satake::tensor_power_decompose(type, k, k));
}
BENCHMARK(BM_TensorPowerDecompose)->Arg(2)->Arg(4);

static void BM_DihedralPowerDecompose(benchmark::State& state) {
  const auto type = satake::GL2Type::dihedral(true);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(satake::tensor_power_decompose(type, k, k));
}
BENCHMARK(BM_DihedralPowerDecompose)->Arg(2)->Arg(4);

static void BM_DirichletRatio(benchmark::State& state) {
  const auto stream = sources::dirichlet_character_stream(4, 1, state.range(0));
  const density::SetSpec spec{density::SetMode::ValueNotEquals, {1.0, 0.0}, 0.0};
  const auto mem = density::classify(stream, spec);
  for (auto _ : state) benchmark::DoNotOptimize(density::dirichlet_ratio(mem, 1.05));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(mem.primes.size()));
}
BENCHMARK(BM_DirichletRatio)->Arg(1000000);

static void BM_CrossoverGammas(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bounds::crossover_gammas(14, 5, 2));
}
BENCHMARK(BM_CrossoverGammas);

BENCHMARK_MAIN();
