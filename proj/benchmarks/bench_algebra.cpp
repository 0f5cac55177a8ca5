#include <benchmark/benchmark.h>

#include <random>

#include "gtmm/algebra.hpp"
#include "gtmm/bilinear.hpp"
#include "gtmm/constructions.hpp"

using namespace gtmm;

namespace {

void bm_realize(benchmark::State& state) {
  const SimultaneousFamily fam = punctured_axis_family(state.range(0));
  const SubsetTriple& t = fam.triples()[0];
  const std::size_t side = t.sizes()[0];
  std::mt19937_64 rng(3);
  const auto a = random_integer_matrix(side, side, -9, 9, rng);
  const auto b = random_integer_matrix(side, side, -9, 9, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize_product(t, a, b));
  }
}

void bm_realize_simultaneous(benchmark::State& state) {
  SimultaneousFamily fam = punctured_axis_family(state.range(0));
  const std::size_t side = fam.triples()[0].sizes()[0];
  std::mt19937_64 rng(4);
  std::vector<MatrixPair> pairs;
  for (int i = 0; i < 2; ++i) {
    pairs.push_back({random_integer_matrix(side, side, -9, 9, rng),
                     random_integer_matrix(side, side, -9, 9, rng)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize_simultaneous(fam, pairs));
  }
}

void bm_naive_product(benchmark::State& state) {
  const std::size_t side = state.range(0);
  std::mt19937_64 rng(5);
  const auto a = random_integer_matrix(side, side, -9, 9, rng);
  const auto b = random_integer_matrix(side, side, -9, 9, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_product(a, b));
  }
}

void bm_strassen_eval(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const auto a = random_integer_matrix(2, 2, -9, 9, rng);
  const auto b = random_integer_matrix(2, 2, -9, 9, rng);
  const BilinearComputation& s = strassen_222();
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_bilinear(s, a, b));
  }
}

}  // namespace

BENCHMARK(bm_realize)->DenseRange(3, 8);
BENCHMARK(bm_realize_simultaneous)->DenseRange(3, 6);
BENCHMARK(bm_naive_product)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_strassen_eval);
