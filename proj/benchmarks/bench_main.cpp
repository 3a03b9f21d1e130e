#include <benchmark/benchmark.h>

#include <random>

#include "locoh/locoh.hpp"

using namespace locoh;

namespace {

GradedRing ring(std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t j = 0; j < n; ++j) vars.push_back(std::string(1, static_cast<char>('x' + j)));
  return GradedRing(FieldSpec(kDefaultCharacteristic), vars);
}

void BM_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  ExactMatrix m(FieldSpec(kDefaultCharacteristic), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 100 < 60) m.set(i, j, static_cast<long long>(rng() % 7) - 3);
  for (auto _ : state) benchmark::DoNotOptimize(rref_with_pivots(m));
}
BENCHMARK(BM_rref)->Arg(16)->Arg(64)->Arg(128);

void BM_koszul_homology(benchmark::State& state) {
  const GradedRing r = ring(3);
  const auto power = static_cast<unsigned>(state.range(0));
  const KoszulSpec spec{r, parse_generators(r, {"x", "y", "z"}), power};
  const PresentedModule m = PresentedModule::from_relations(r, {0}, {parse_generators(r, {"x^2", "y*z"})});
  for (auto _ : state) benchmark::DoNotOptimize(koszul_homology_table(spec, m, {0, 3}, {-6, 6}));
}
BENCHMARK(BM_koszul_homology)->Arg(1)->Arg(2)->Arg(4);

void BM_local_cohomology(benchmark::State& state) {
  const GradedRing r = ring(2);
  const auto gens = parse_generators(r, {"x", "y"});
  const PresentedModule m = PresentedModule::from_relations(r, {0}, {parse_generators(r, {"x^2", "x*y"})});
  const TowerParams params{static_cast<unsigned>(state.range(0)), 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(local_cohomology_table(gens, m, {0, 2}, {-6, 2}, params));
}
BENCHMARK(BM_local_cohomology)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
