#include <benchmark/benchmark.h>

#include "conic/point_search.hpp"

namespace {

using conic::BivarPoly;
using conic::FqElement;
using conic::PointSystem;

/// X^2 + XY + Y^2 + 1 together with 1 + X, over GF(2^k). The second
/// equation forces x = 1, so find scans until the first y with
/// y^2 + y = 0 and count scans everything.
PointSystem make_system(int k) {
  auto field = conic::make_standard_field(k);
  const FqElement one = field->one();
  BivarPoly<FqElement> g;
  g.add_term(one, 2, 0);
  g.add_term(one, 1, 1);
  g.add_term(one, 0, 2);
  g.add_term(one, 0, 0);
  BivarPoly<FqElement> line;
  line.add_term(one, 1, 0);
  line.add_term(one, 0, 0);
  return PointSystem{field, {g, line}};
}

/// X^2 + X + (generator): no common zero unless pathological, so the
/// search visits all of F^2.
PointSystem make_empty_system(int k) {
  auto field = conic::make_standard_field(k);
  BivarPoly<FqElement> g;
  g.add_term(field->one(), 2, 0);
  g.add_term(field->one(), 1, 0);
  g.add_term(field->one(), 0, 0);
  g.add_term(field->one(), 0, 2);
  g.add_term(field->one(), 0, 1);
  return PointSystem{field, {g, g + BivarPoly<FqElement>::constant(field->one())}};
}

void BM_CountSerial(benchmark::State& state) {
  const PointSystem sys = make_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conic::count_common_zeros_serial(sys));
}

void BM_CountParallel(benchmark::State& state) {
  const PointSystem sys = make_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conic::count_common_zeros_parallel(sys));
}

void BM_FindEmptySerial(benchmark::State& state) {
  const PointSystem sys = make_empty_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conic::find_common_zero_serial(sys));
}

void BM_FindEmptyParallel(benchmark::State& state) {
  const PointSystem sys = make_empty_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conic::find_common_zero_parallel(sys));
}

}  // namespace

BENCHMARK(BM_CountSerial)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CountParallel)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FindEmptySerial)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FindEmptyParallel)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
