#include <benchmark/benchmark.h>

#include "rephom/block_complex.hpp"
#include "rephom/catalog.hpp"
#include "rephom/lie_algebra.hpp"
#include "rephom/macdonald.hpp"
#include "rephom/poincare_series.hpp"
#include "rephom/rep_complex.hpp"

namespace {

using namespace rephom;

const rep::RepComplex& cp2_sl2() {
  static const auto models = model::catalog("cp:2", 12);
  static const rep::RepComplex rc(*models.quillen, lie::LieAlgebra::builtin("sl2"));
  return rc;
}

void BM_SparseRank(benchmark::State& state) {
  const auto& rc = cp2_sl2();
  const int degree = static_cast<int>(state.range(0));
  const auto source = block::enumerate_block(rc.algebra(), degree);
  const auto target = block::enumerate_block(rc.algebra(), degree - 1);
  const auto m =
      block::operator_matrix(rc.algebra(), rc.diff(), source, target);
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_SparseRank)->Arg(6)->Arg(8)->Arg(10);

void BM_BlockHomology(benchmark::State& state) {
  const auto models = model::catalog("cp:2", 12);
  const auto g = lie::LieAlgebra::builtin("sl2");
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const rep::RepComplex rc(*models.quillen, g);
    benchmark::DoNotOptimize(rc.homology_dims(degree));
  }
}
BENCHMARK(BM_BlockHomology)->Arg(6)->Arg(8);

void BM_ConstantTerm(benchmark::State& state) {
  const auto rs = macd::RootSystem::builtin("A2");
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(macd::raw_ct_q(rs, r).coefficient(0, 0));
}
BENCHMARK(BM_ConstantTerm)->Arg(1)->Arg(2);

void BM_SeriesProduct(benchmark::State& state) {
  const int max_degree = static_cast<int>(state.range(0));
  std::vector<std::pair<int, gca::Weight>> odd, even;
  for (int d = 1; d <= 9; d += 2) odd.emplace_back(d, gca::weight_zero());
  for (int d = 2; d <= 8; d += 2) even.emplace_back(d, gca::weight_zero());
  const auto a =
      PoincareSeries::free_commutative(odd, even, max_degree);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_SeriesProduct)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
