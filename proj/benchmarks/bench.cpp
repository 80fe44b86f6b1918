#include <benchmark/benchmark.h>

#include "spin9/berger.hpp"
#include "spin9/structures.hpp"
#include "spin9/verify.hpp"

namespace {

using namespace spin9;

void BM_OctonionMultiply(benchmark::State& state) {
  std::array<Scalar, 8> xc, yc;
  for (int i = 0; i < 8; ++i) {
    xc[i] = frac(i + 1, 3);
    yc[i] = frac(7 - i, 5);
  }
  Octonion x = Octonion::from_coords(xc), y = Octonion::from_coords(yc);
  for (auto _ : state) benchmark::DoNotOptimize(omul(x, y));
}
BENCHMARK(BM_OctonionMultiply);

void BM_WedgeSquarePsiEntry(benchmark::State& state) {
  const FormMatrix& psi = spin9_kahler_matrix();
  const KForm& f = psi.entry(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(wedge_square(f));
}
BENCHMARK(BM_WedgeSquarePsiEntry);

void BM_BergerDim4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(berger_form(4));
}
BENCHMARK(BM_BergerDim4);

void BM_Tau4(benchmark::State& state) {
  const FormMatrix& psi = spin9_kahler_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_coeff(psi, 4));
}
BENCHMARK(BM_Tau4)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
