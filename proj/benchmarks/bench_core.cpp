#include <benchmark/benchmark.h>

#include "superfft/invariants.hpp"
#include "superfft/pfaffian.hpp"
#include "superfft/random_elements.hpp"
#include "superfft/supermatrix.hpp"

using namespace superfft;

namespace {

std::pair<GPoly, GPoly> dense_pair() {
  RingPtr ring = RingSpec::make({"x", "y", "z"}, {"t1", "t2", "t3", "t4", "t5", "t6"});
  Rng rng(99);
  GPoly a = random_gpoly(rng, ring, 40, 3);
  GPoly b = random_gpoly(rng, ring, 40, 3);
  return {a, b};
}

void BM_GPolyMul(benchmark::State& state) {
  auto [a, b] = dense_pair();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GPolyMul);

void BM_DivideExact(benchmark::State& state) {
  auto [a, b] = dense_pair();
  GPoly d = GPoly::constant(a.ring(), 3) + a.reduced_part() * a.reduced_part();
  GPoly p = b * d;
  for (auto _ : state) benchmark::DoNotOptimize(divide_exact(p, d));
}
BENCHMARK(BM_DivideExact);

void BM_GramDet(benchmark::State& state) {
  GenericConfig cfg = GenericConfig::make(static_cast<uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(gram_det(cfg));
}
BENCHMARK(BM_GramDet)->Arg(2)->Arg(3);

void BM_SuperPfaffian(benchmark::State& state) {
  GenericConfig cfg = GenericConfig::make(static_cast<uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(super_pfaffian(cfg));
}
BENCHMARK(BM_SuperPfaffian)->Arg(1)->Arg(2)->Arg(3);

void BM_SospInvariance(benchmark::State& state) {
  GenericConfig cfg = GenericConfig::make(2, 1);
  PfaffianCertificate cert = super_pfaffian(cfg);
  for (auto _ : state) {
    PfaffianCertificate copy = cert;
    verify_sosp_invariance(cfg, copy);
    benchmark::DoNotOptimize(copy);
  }
}
BENCHMARK(BM_SospInvariance);

void BM_MatchingTensor(benchmark::State& state) {
  FormSpec f = FormSpec::standard_even(2, 1);
  Matching crossing{{{0, 2}, {1, 3}}};
  for (auto _ : state) benchmark::DoNotOptimize(matching_tensor(f, crossing));
}
BENCHMARK(BM_MatchingTensor);

void BM_FftReport(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fft_spanning_report(Group::OSp, 2, 1, static_cast<uint32_t>(state.range(0))));
}
BENCHMARK(BM_FftReport)->Arg(4)->Arg(6);

void BM_Berezinian(benchmark::State& state) {
  RingPtr ring = RingSpec::make({}, {});
  SuperDim dim{2, 2};
  Rng rng(7);
  RationalMatrix a(dim.total(), dim.total());
  RationalMatrix ae = random_invertible_rational(rng, 2);
  RationalMatrix ao = random_invertible_rational(rng, 2);
  for (uint32_t r = 0; r < 2; ++r)
    for (uint32_t c = 0; c < 2; ++c) {
      a.at(r, c) = ae.at(r, c);
      a.at(2 + r, 2 + c) = ao.at(r, c);
    }
  SuperMatrix sa = SuperMatrix::from_rational(ring, dim, dim, Parity::Even, a);
  for (auto _ : state) benchmark::DoNotOptimize(berezinian(sa));
}
BENCHMARK(BM_Berezinian);

}  // namespace

BENCHMARK_MAIN();
