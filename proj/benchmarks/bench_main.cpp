#include <benchmark/benchmark.h>

#include "hyperlift/curve.hpp"
#include "hyperlift/fq_poly.hpp"
#include "hyperlift/groups.hpp"
#include "hyperlift/group_type.hpp"

using namespace hyperlift;

static void BM_FieldMul(benchmark::State& state) {
  const auto k = fq_ctx_new(7, static_cast<int>(state.range(0)));
  FqElem a = FqElem::generator(k) + FqElem::one(k), b = a;
  for (auto _ : state) {
    a *= b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

static void BM_SquarefreeDecompose(benchmark::State& state) {
  const auto k = fq_ctx_new(5, 1);
  const FqPoly base = FqPoly::from_ints(k, {1, 2, 0, 1});
  const FqPoly f = base.pow(5) * FqPoly::from_ints(k, {3, 1}).pow(3) * FqPoly::from_ints(k, {1, 0, 0, 0, 0, 0, 4, 1});
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_decompose(f));
}
BENCHMARK(BM_SquarefreeDecompose);

static void BM_ReducedAutgroup(benchmark::State& state) {
  const HyperCurve c = curve_from_ints(3, 1, {1, 0, 1, 0, 1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(reduced_autgroup(c));
}
BENCHMARK(BM_ReducedAutgroup)->Unit(benchmark::kMillisecond);

static void BM_Isomorphism(benchmark::State& state) {
  const FiniteGroup a = reference_group(GroupType::simple(GroupType::Kind::S4));
  const FiniteGroup b = reference_group(GroupType::with_n(GroupType::Kind::Dihedral, 12));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_isomorphic(a, a));
    benchmark::DoNotOptimize(is_isomorphic(a, b));
  }
}
BENCHMARK(BM_Isomorphism)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
