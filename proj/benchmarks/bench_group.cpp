#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gtmm/dsl.hpp"
#include "gtmm/group.hpp"

using namespace gtmm;

namespace {

std::vector<Elem> sample_elements(const Group& g, std::size_t count) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> dist(0, g.order() - 1);
  std::vector<Elem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(g.element(dist(rng)));
  return out;
}

void bm_mul_structural(benchmark::State& state, const char* dsl) {
  const Group g = parse_group(dsl);
  const auto elems = sample_elements(g, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const Elem r = g.mul(elems[i & 1023], elems[(i + 7) & 1023]);
    benchmark::DoNotOptimize(r.code);
    ++i;
  }
}

void bm_mul_table(benchmark::State& state, const char* dsl) {
  const Group g = parse_group(dsl);
  g.memoize_tables();
  const auto elems = sample_elements(g, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const Elem r = g.mul(elems[i & 1023], elems[(i + 7) & 1023]);
    benchmark::DoNotOptimize(r.code);
    ++i;
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_mul_structural, cyc512, "cyc(512)");
BENCHMARK_CAPTURE(bm_mul_structural, cyc4_cubed, "cyc(4)^3");
BENCHMARK_CAPTURE(bm_mul_structural, sym6, "sym(6)");
BENCHMARK_CAPTURE(bm_mul_structural, wreath_cube, "wr(cyc(3)^3, 2)");
BENCHMARK_CAPTURE(bm_mul_table, cyc4_cubed, "cyc(4)^3");
BENCHMARK_CAPTURE(bm_mul_table, sym6, "sym(6)");
BENCHMARK_CAPTURE(bm_mul_table, wreath_cube, "wr(cyc(3)^3, 2)");
