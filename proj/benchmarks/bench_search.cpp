#include <benchmark/benchmark.h>

#include "minram/construct.hpp"

using namespace minram;

namespace {

void BM_SearchD8(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_d8(p, 4, {1000000, 0, 1}));
}
BENCHMARK(BM_SearchD8)->Arg(31)->Arg(257)->Unit(benchmark::kMillisecond);

void BM_SearchS3(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_s3(p, 2, {1000000, 0, 1}));
}
BENCHMARK(BM_SearchS3)->Arg(67)->Arg(199)->Unit(benchmark::kMillisecond);

void BM_UnitGroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unit_group_structure(3, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_UnitGroup)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_PollackCount(benchmark::State& state) {
  PrimeField f(7);
  std::vector<FpPoly> fs{FpPoly::variable(f)};
  for (auto _ : state) benchmark::DoNotOptimize(pollack_count(FieldSpec{7, std::nullopt}, 3, fs));
}
BENCHMARK(BM_PollackCount)->Unit(benchmark::kMillisecond);

}  // namespace
