#include <benchmark/benchmark.h>

#include "yangian/cyclicity.hpp"
#include "yangian/root_system.hpp"
#include "yangian/series.hpp"
#include "yangian/transport.hpp"
#include "yangian/ysl2.hpp"

using namespace yangian;

namespace {

ParamSeries sample_series(unsigned order) {
  const ParamPoly a = ParamPoly::variable();
  std::vector<ParamPoly> roots{a, a + ParamPoly(Rational(3) / 2), a - ParamPoly(2)};
  std::vector<ParamPoly> shifted;
  for (const auto& r : roots) shifted.push_back(r - ParamPoly(1));
  return series_from_poly_ratio(UniPoly::from_roots(shifted), UniPoly::from_roots(roots), order);
}

void BM_SeriesLog(benchmark::State& state) {
  const auto s = sample_series(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_log(s));
}
BENCHMARK(BM_SeriesLog)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesExp(benchmark::State& state) {
  const auto s = series_log(sample_series(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(series_exp(s));
}
BENCHMARK(BM_SeriesExp)->Arg(8)->Arg(16)->Arg(32);

void BM_WalkG2(benchmark::State& state) {
  const auto c = cartan_g2();
  const int node = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_walk(c, {1, 2, 1, 2, 1, 2}, node));
}
BENCHMARK(BM_WalkG2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DeriveSSetsG2(benchmark::State& state) {
  const auto c = cartan_g2();
  for (auto _ : state) benchmark::DoNotOptimize(derive_s_sets(c, {1, 2, 1, 2, 1, 2}));
}
BENCHMARK(BM_DeriveSSetsG2)->Unit(benchmark::kMillisecond);

void BM_WeylLongest(benchmark::State& state) {
  const auto a3 = validate_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, "a3");
  for (auto _ : state) benchmark::DoNotOptimize(weyl_longest(a3));
}
BENCHMARK(BM_WeylLongest);

void BM_Sl2Relations(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sl2::check_relations(m, Rational(5) / 3, 3));
}
BENCHMARK(BM_Sl2Relations)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
