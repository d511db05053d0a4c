#include <benchmark/benchmark.h>

#include "knotsig/corpus.hpp"
#include "knotsig/invariants.hpp"
#include "knotsig/region_matrices.hpp"
#include "knotsig/seifert.hpp"

using namespace knotsig;

namespace {

Diagram torus35() { return Diagram::parse("B 3: 1 2 1 2 1 2 1 2 1 2"); }

void BM_BuildRegionMatrix(benchmark::State& state) {
  const Diagram d = torus35();
  for (auto _ : state) benchmark::DoNotOptimize(kashaev_matrix(d));
}
BENCHMARK(BM_BuildRegionMatrix);

void BM_InvariantAtPoint(benchmark::State& state) {
  const Diagram d = torus35();
  const UPolyMatrix tau = kashaev_matrix(d);
  const Rat x = rat(3, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(kashaev_invariant(tau, d.writhe(), x));
}
BENCHMARK(BM_InvariantAtPoint);

void BM_DeletedDeterminant(benchmark::State& state) {
  const Diagram d = torus35();
  const UPolyMatrix tau = kashaev_matrix(d);
  for (auto _ : state)
    benchmark::DoNotOptimize(det_upoly_matrix(delete_adjacent_pair(tau, d)));
}
BENCHMARK(BM_DeletedDeterminant);

void BM_FactorizationCheck(benchmark::State& state) {
  const Diagram d = torus35();
  for (auto _ : state) benchmark::DoNotOptimize(factorization_check(d));
}
BENCHMARK(BM_FactorizationCheck);

void BM_Scan64(benchmark::State& state) {
  const Diagram d = Diagram::parse("B 2: 1 1 1");
  const UPolyMatrix tau = kashaev_matrix(d);
  const SeifertMatrix a = seifert_from_braid(*d.braid());
  const auto grid = pythagorean_points(64, {alexander_y_form(d)});
  for (auto _ : state) {
    int acc = 0;
    for (const CirclePoint& p : grid)
      acc += kashaev_invariant(tau, d.writhe(), p.x()) - 2 * lt_signature(a, p);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_Scan64);

}  // namespace

BENCHMARK_MAIN();
