#include <benchmark/benchmark.h>

#include "gtmm/constructions.hpp"
#include "gtmm/tpp.hpp"

using namespace gtmm;

namespace {

void bm_tpp_naive(benchmark::State& state) {
  const SimultaneousFamily fam = punctured_axis_family(state.range(0));
  const SubsetTriple& t = fam.triples()[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_tpp_violation_naive(t).has_value());
  }
}

void bm_tpp_quotient(benchmark::State& state) {
  const SimultaneousFamily fam = punctured_axis_family(state.range(0));
  const SubsetTriple& t = fam.triples()[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_tpp_violation(t).has_value());
  }
}

void bm_stpp(benchmark::State& state) {
  const SimultaneousFamily fam = punctured_axis_family(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_stpp_violation(fam).has_value());
  }
}

void bm_wreath_lift_check(benchmark::State& state) {
  const SubsetTriple lifted =
      wreath_triple(punctured_axis_family(3), /*verify=*/false);
  lifted.group().memoize_tables();  // exclude the one-time table build
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_tpp_violation(lifted).has_value());
  }
}

}  // namespace

BENCHMARK(bm_tpp_naive)->DenseRange(3, 8);
BENCHMARK(bm_tpp_quotient)->DenseRange(3, 8);
BENCHMARK(bm_stpp)->DenseRange(3, 8);
BENCHMARK(bm_wreath_lift_check);
