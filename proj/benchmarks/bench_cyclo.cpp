// Exact-arithmetic hot paths: multiplication and inversion in Q(zeta_72)
// dominate exact verification, so regressions here show up everywhere.

#include <benchmark/benchmark.h>

#include "sicgen/cyclo.hpp"

namespace {

using sic::Cyclo;
using sic::CycloContext;
using sic::rational;

Cyclo dense_element(const std::shared_ptr<const CycloContext>& ctx, int salt) {
  // Touches every basis coefficient so reduction does real work.
  Cyclo acc = Cyclo::zero(ctx);
  for (int j = 0; j < ctx->degree(); ++j) {
    Cyclo term = Cyclo::root(ctx, ctx->conductor(), j + salt) *
                 Cyclo::from_rational(ctx, rational(2 * j + salt + 1, j + 2));
    acc = acc + term;
  }
  return acc;
}

void BM_cyclo_multiply(benchmark::State& state) {
  auto ctx = CycloContext::get(72);
  Cyclo a = dense_element(ctx, 1);
  Cyclo b = dense_element(ctx, 5);
  for (auto _ : state) {
    Cyclo c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_cyclo_multiply);

void BM_cyclo_inverse(benchmark::State& state) {
  auto ctx = CycloContext::get(72);
  Cyclo a = dense_element(ctx, 3);
  for (auto _ : state) {
    Cyclo c = a.inv();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_cyclo_inverse);

void BM_cyclo_abs_sq(benchmark::State& state) {
  auto ctx = CycloContext::get(72);
  Cyclo a = dense_element(ctx, 7);
  for (auto _ : state) {
    Cyclo c = a.abs_sq();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_cyclo_abs_sq);

void BM_cyclo_embed(benchmark::State& state) {
  auto ctx = CycloContext::get(72);
  Cyclo a = dense_element(ctx, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.embed());
  }
}
BENCHMARK(BM_cyclo_embed);

}  // namespace
