#include <benchmark/benchmark.h>

#include "stabforge/census.hpp"
#include "stabforge/constructor.hpp"
#include "stabforge/speclang.hpp"

using namespace stabforge;

namespace {

void bm_chain_build(benchmark::State& state) {
  PermGroup g = parse_group("wr(sym(4), sym(4))");
  std::vector<Perm> gens = g.generators();
  for (auto _ : state) {
    PermGroup rebuilt(16, gens);
    benchmark::DoNotOptimize(rebuilt.order());
  }
}
BENCHMARK(bm_chain_build);

void bm_set_stabilizer(benchmark::State& state) {
  PermGroup g = parse_group("wr(sym(4), sym(4))");
  PointMask full = full_mask(16);
  std::uint64_t i = 0;
  for (auto _ : state) {
    PointMask m = mix64(5, i++) & full;
    benchmark::DoNotOptimize(set_stabilizer(g, m).order());
  }
}
BENCHMARK(bm_set_stabilizer);

void bm_structure_report(benchmark::State& state) {
  PermGroup g = parse_group("prodwr(sym(3), sym(3))");
  PermGroup s = set_stabilizer(g, points_to_mask({0, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_structure(s));
}
BENCHMARK(bm_structure_report);

void bm_hit_bitmap(benchmark::State& state) {
  PermGroup g = parse_group("as(2,3)");
  for (auto _ : state) benchmark::DoNotOptimize(g0_hit_bitmap(g).count());
}
BENCHMARK(bm_hit_bitmap);

void bm_census_deg8(benchmark::State& state) {
  PermGroup g = parse_group("as(2,3)");
  for (auto _ : state)
    benchmark::DoNotOptimize(structure_census(g, CensusMode{true, 0, 0}).rows.size());
}
BENCHMARK(bm_census_deg8);

void bm_nice_pair(benchmark::State& state) {
  PermGroup g = parse_group("wr(sym(4), sym(4))");
  for (auto _ : state) {
    Certificate c = small_stabilizer_set(g);
    benchmark::DoNotOptimize(c.delta);
  }
}
BENCHMARK(bm_nice_pair);

}  // namespace

BENCHMARK_MAIN();
