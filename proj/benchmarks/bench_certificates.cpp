#include <benchmark/benchmark.h>

#include "trueelem/congruence.hpp"
#include "trueelem/freegroup.hpp"
#include "trueelem/sampling.hpp"
#include "trueelem/verify.hpp"

using namespace trueelem;

namespace {

const RingSpec Z = RingSpec::integers();

void BM_SuslinFactorize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Sampler rng(1);
  const SqMatrix g = rng.special_linear(Z, n, 12, 5);
  const RingValue a(Z, 7);
  for (auto _ : state) benchmark::DoNotOptimize(suslin_factorize(g, 1, 2, a));
}
BENCHMARK(BM_SuslinFactorize)->DenseRange(3, 6);

void BM_ConjugateInF(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Sampler rng(2);
  const Ideal ideal(Z, 3);
  const SqMatrix g = rng.omega_matrix(Z, n, ideal);
  const RingValue a(Z, 6);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_in_F(g, 1, 2, a, ideal));
}
BENCHMARK(BM_ConjugateInF)->DenseRange(3, 5);

void BM_VerifyCertificate(benchmark::State& state) {
  Sampler rng(3);
  const Ideal ideal(Z, 2);
  const Certificate c = conjugate_in_F(rng.omega_matrix(Z, 4, ideal), 2, 3, RingValue(Z, 4), ideal);
  state.counters["letters"] = static_cast<double>(c.witness.letter_count());
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(c));
}
BENCHMARK(BM_VerifyCertificate);

void BM_EnumerateOrders(benchmark::State& state) {
  const RingSpec z4 = RingSpec::modular(4);
  const Ideal two(z4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orders(z4, 3, two));
}
BENCHMARK(BM_EnumerateOrders)->Unit(benchmark::kMillisecond);

void BM_StallingsMember(benchmark::State& state) {
  const std::vector<FreeWord> gens{FreeWord::parse("a^4"), FreeWord::parse("b")};
  const FreeWord w = FreeWord::parse("a^4 b^3 a^-8 b a^4 b^-2 a b^4 a^-1");
  for (auto _ : state) benchmark::DoNotOptimize(stallings_member(w, gens));
}
BENCHMARK(BM_StallingsMember);

}  // namespace
BENCHMARK_MAIN();
