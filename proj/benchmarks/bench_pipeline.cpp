#include <benchmark/benchmark.h>

#include "hurwitz/braid.hpp"
#include "hurwitz/deform.hpp"
#include "hurwitz/modp.hpp"
#include "hurwitz/nielsen.hpp"
#include "hurwitz/specialize.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

namespace {

const PipelineResult& pipe6() {
  static const PipelineResult p = run_pipeline(6);
  return p;
}

void BM_enumerate_classes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sni(n));
}
BENCHMARK(BM_enumerate_classes)->DenseRange(6, 20, 2);

void BM_curve_monodromy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_monodromy(n));
}
BENCHMARK(BM_curve_monodromy)->DenseRange(6, 20, 2)->Unit(benchmark::kMillisecond);

void BM_newton_lift(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int prec = n == 6 ? 64 : 128;
  for (auto _ : state) benchmark::DoNotOptimize(newton_lift(n, prec));
}
BENCHMARK(BM_newton_lift)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_reconstruct(benchmark::State& state) {
  const SeriesNormalization& norm = pipe6().normalization;
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(norm));
}
BENCHMARK(BM_reconstruct)->Unit(benchmark::kMillisecond);

void BM_certify_model(benchmark::State& state) {
  const auto& model = pipe6().reconstruction.model;
  for (auto _ : state) benchmark::DoNotOptimize(verify_model(model));
}
BENCHMARK(BM_certify_model)->Unit(benchmark::kMillisecond);

void BM_interval_probe(benchmark::State& state) {
  const auto& model = pipe6().reconstruction.model;
  const Rational t0(-17, 10);
  ProbeOptions opt;
  opt.count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(totally_real_probe(model, t0, opt));
}
BENCHMARK(BM_interval_probe)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_modular_evidence(benchmark::State& state) {
  const auto& model = pipe6().reconstruction.model;
  const Rational t0(-17, 10);
  const auto fiber = fiber_polynomial(model, t0, Rational(7, 43065));
  const auto primes = odd_primes_below(200);
  for (auto _ : state) benchmark::DoNotOptimize(sn_evidence(fiber, primes));
}
BENCHMARK(BM_modular_evidence)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
