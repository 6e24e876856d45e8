// Verification throughput: the float SIC check on the 9-vector d=3 set, its
// exact counterpart, the triple-product invariant, and a small grid sweep.

#include <benchmark/benchmark.h>

#include "sicgen/constructions.hpp"
#include "sicgen/verify.hpp"

namespace {

using namespace sic;

void BM_check_sic_float_d3(benchmark::State& state) {
  LineSetT<Complex> s = bicyclic_d3(bicyclic_d3_standard_solution()).sic;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_sic(s, 1e-10));
  }
}
BENCHMARK(BM_check_sic_float_d3);

void BM_check_sic_exact_d2(benchmark::State& state) {
  ExactOps ops;
  LineSetT<Cyclo> s = power_d2_sic(ops);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_sic(s, 0.0));
  }
}
BENCHMARK(BM_check_sic_exact_d2);

void BM_triple_products_d3(benchmark::State& state) {
  LineSetT<Complex> s = bicyclic_d3(bicyclic_d3_standard_solution()).sic;
  for (auto _ : state) {
    benchmark::DoNotOptimize(triple_products(s));
  }
}
BENCHMARK(BM_triple_products_d3);

void BM_diagonal_sweep(benchmark::State& state) {
  BicyclicD3<Complex> b = bicyclic_d3(bicyclic_d3_standard_solution());
  std::vector<Vec<Complex>> basis = {b.orbits[0].vectors[0], b.orbits[1].vectors[0],
                                     b.orbits[2].vectors[0]};
  int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagonal_extension_sweep(basis, resolution));
  }
}
BENCHMARK(BM_diagonal_sweep)->Arg(90)->Unit(benchmark::kMillisecond);

}  // namespace
