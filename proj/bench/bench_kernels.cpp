// Serial reference vs OpenMP kernels on the heaviest corpus scans.

#include <benchmark/benchmark.h>

#include "isw/centrality.hpp"
#include "isw/constructions.hpp"
#include "isw/kernels.hpp"
#include "isw/partial_bijection.hpp"
#include "isw/series.hpp"

namespace {

using isw::kernels::Mode;

const isw::InverseSemigroup& is3() {
  static const auto s = isw::symmetric_inverse_monoid(3).algebra;
  return s;
}

const isw::InverseSemigroup& z4xz4() {
  static const auto s = isw::direct_product(isw::cyclic_group(4), isw::cyclic_group(4));
  return s;
}

void bench_tc_full_scan(benchmark::State& state, Mode mode) {
  // TC(m, 1, 1) holds on an abelian group, so the scan runs to completion
  const auto& s = z4xz4();
  const isw::Partition one = isw::Partition::universal(s.order());
  for (auto _ : state) {
    auto w = isw::kernels::tc_scan(s, isw::term_m(), one, one, 1ull << 40, mode);
    benchmark::DoNotOptimize(w);
  }
}

void bench_tc_witness_hunt(benchmark::State& state, Mode mode) {
  // TC(m, 1, 1) fails on IS(3); measures time to the least witness
  const auto& s = is3();
  const isw::Partition one = isw::Partition::universal(s.order());
  for (auto _ : state) {
    auto w = isw::kernels::tc_scan(s, isw::term_m(), one, one, 1ull << 40, mode);
    benchmark::DoNotOptimize(w);
  }
}

void bench_mu2(benchmark::State& state, Mode mode) {
  const auto& s = is3();
  auto words = isw::malcev_words(2);
  for (auto _ : state) {
    auto mu = isw::kernels::word_equality_scan(s, words.lambda, words.rho, 1ull << 40, mode);
    benchmark::DoNotOptimize(mu);
  }
}

void bench_mu3(benchmark::State& state, Mode mode) {
  const auto& s = is3();
  auto words = isw::malcev_words(3);
  for (auto _ : state) {
    auto mu = isw::kernels::word_equality_scan(s, words.lambda, words.rho, 1ull << 40, mode);
    benchmark::DoNotOptimize(mu);
  }
}

} // namespace

BENCHMARK_CAPTURE(bench_tc_full_scan, serial, Mode::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_tc_full_scan, parallel, Mode::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_tc_witness_hunt, serial, Mode::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_tc_witness_hunt, parallel, Mode::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_mu2, serial, Mode::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_mu2, parallel, Mode::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_mu3, serial, Mode::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_mu3, parallel, Mode::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
