#include <benchmark/benchmark.h>

#include <random>

#include "minram/bivar.hpp"
#include "minram/carlitz.hpp"
#include "minram/curves.hpp"
#include "minram/factor.hpp"
#include "minram/text.hpp"

using namespace minram;

namespace {

FpPoly random_monic(const PrimeField& f, int deg, std::mt19937_64& rng) {
  std::vector<std::uint64_t> c(deg + 1);
  for (auto& x : c) x = rng() % f.characteristic();
  c[deg] = 1;
  return FpPoly(f, c);
}

void BM_Factor(benchmark::State& state) {
  PrimeField f(251);
  std::mt19937_64 rng(1);
  FpPoly a = random_monic(f, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(factor(a));
}
BENCHMARK(BM_Factor)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_IsIrreducible(benchmark::State& state) {
  PrimeField f(65521);
  std::mt19937_64 rng(2);
  FpPoly a = random_monic(f, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(a));
}
BENCHMARK(BM_IsIrreducible)->Arg(6)->Arg(12)->Arg(24);

void BM_DiscriminantQuartic(benchmark::State& state) {
  PrimeField f(257);
  std::mt19937_64 rng(3);
  const int d = static_cast<int>(state.range(0));
  XPoly g(f, {random_monic(f, 2 * d, rng), FpPoly(f), random_monic(f, d, rng), FpPoly(f), FpPoly::one(f)});
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(g));
}
BENCHMARK(BM_DiscriminantQuartic)->Arg(2)->Arg(4)->Arg(8);

void BM_CarlitzAction(benchmark::State& state) {
  PrimeField f(3);
  std::mt19937_64 rng(4);
  FpPoly m = random_monic(f, static_cast<int>(state.range(0)), rng);
  FpPoly mod = random_monic(f, 12, rng), alpha = random_monic(f, 7, rng);
  for (auto _ : state) benchmark::DoNotOptimize(carlitz_action(m, alpha, mod));
}
BENCHMARK(BM_CarlitzAction)->Arg(4)->Arg(16)->Arg(64);

void BM_ClassNumberGenus2(benchmark::State& state) {
  PrimeField f(static_cast<std::uint64_t>(state.range(0)));
  auto m = QuadraticModel::hyperelliptic(parse_poly("4t^6+t^4+3t^2+2", f));
  for (auto _ : state) benchmark::DoNotOptimize(class_number(m));
}
BENCHMARK(BM_ClassNumberGenus2)->Arg(13)->Arg(31)->Arg(61);

}  // namespace

BENCHMARK_MAIN();
