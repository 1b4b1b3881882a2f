#include <benchmark/benchmark.h>

#include <random>

#include "mints/known_eps.hpp"
#include "mints/oracle.hpp"
#include "mints/scheme.hpp"
#include "mints/verify.hpp"

namespace {

mints::Scheme random_scheme(unsigned seed, int n, long long max_entry) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> dist(0, max_entry);
  std::vector<long long> p(n), q(n);
  for (int r = 0; r < n; ++r) {
    do {
      p[r] = dist(rng);
      q[r] = dist(rng);
    } while (p[r] == 0 && q[r] == 0);
  }
  return mints::Scheme::classic(std::move(p), std::move(q));
}

void BM_VerifyFactorial(benchmark::State& state) {
  const mints::Scheme s = mints::factorial_scheme(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mints::verify_scheme(s).feasible);
}
BENCHMARK(BM_VerifyFactorial)->Arg(5)->Arg(8);

void BM_VerifyRandom(benchmark::State& state) {
  const mints::Scheme s = random_scheme(99, static_cast<int>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(mints::verify_scheme(s).feasible);
}
BENCHMARK(BM_VerifyRandom)->Arg(8)->Arg(12);

void BM_NaiveVerify(benchmark::State& state) {
  const mints::Scheme s = random_scheme(99, static_cast<int>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(mints::oracle::naive_verify(s).feasible);
}
BENCHMARK(BM_NaiveVerify)->Arg(6)->Arg(8);

void BM_VerifyInjective(benchmark::State& state) {
  const mints::Scheme s = random_scheme(7, static_cast<int>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(mints::known_eps::verify_injective(s).feasible);
}
BENCHMARK(BM_VerifyInjective)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
