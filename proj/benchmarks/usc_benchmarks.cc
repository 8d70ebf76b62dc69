#include <benchmark/benchmark.h>

#include "usc/coverage.h"
#include "usc/gallery.h"
#include "usc/mahavier.h"

namespace {

using usc::Rational;

void BM_CellFeasible(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  std::vector<usc::LinearConstraint> cs;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    std::vector<Rational> a(dim, Rational(0));
    a[i] = 1;
    a[i + 1] = 1;
    cs.push_back(usc::LinearConstraint::equal(a, Rational(1)));
  }
  const usc::Cell cell(dim, cs);
  for (auto _ : state) benchmark::DoNotOptimize(usc::cell_feasible(cell));
}
BENCHMARK(BM_CellFeasible)->DenseRange(2, 8, 2);

void BM_BuildMirrorK(benchmark::State& state) {
  const usc::Relation mirror = usc::make_example("mirror");
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(usc::k_set(mirror, n));
}
BENCHMARK(BM_BuildMirrorK)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_ConsecutiveVsAllPairs(benchmark::State& state) {
  const usc::Relation f = usc::make_example("id-or-B");
  const auto s = usc::ChainSystem::single(f, static_cast<std::size_t>(state.range(0)));
  const auto k = usc::build_gset(s, usc::Semantics::kConsecutive);
  const auto g = usc::build_gset(s, usc::Semantics::kAllPairs);
  for (auto _ : state) benchmark::DoNotOptimize(usc::gset_equal(k, g));
}
BENCHMARK(BM_ConsecutiveVsAllPairs)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CellInUnion(benchmark::State& state) {
  // Unit square against k vertical strips.
  const long k = state.range(0);
  std::vector<usc::Cell> cover;
  for (long i = 0; i < k; ++i) {
    const Rational lo(i, k), hi(i + 1, k);
    cover.emplace_back(2, std::vector<usc::LinearConstraint>{
                              usc::LinearConstraint::less_equal({Rational(1), Rational(0)}, hi),
                              usc::LinearConstraint::less_equal({Rational(-1), Rational(0)}, -lo)});
  }
  const usc::Cell square(2);
  for (auto _ : state) benchmark::DoNotOptimize(usc::cell_in_union(square, cover));
}
BENCHMARK(BM_CellInUnion)->RangeMultiplier(2)->Range(2, 32);

void BM_IsIdempotent(benchmark::State& state) {
  const usc::Relation r = usc::random_lemma44(7, Rational(1, 2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(usc::is_idempotent(r));
}
BENCHMARK(BM_IsIdempotent)->RangeMultiplier(2)->Range(1, 16);

}  // namespace

BENCHMARK_MAIN();
