// Microbenchmarks for the hot paths: integer normal forms, the invariant
// rebuild, product verification and the brute force distance search.

#include <benchmark/benchmark.h>

#include "ldikit/catalog.hpp"
#include "ldikit/distance.hpp"
#include "ldikit/ldi.hpp"
#include "ldikit/linalg.hpp"

namespace {

using ldikit::GeneratorMatrix;
using ldikit::Int;
using ldikit::IntMatrix;

/* Steane generators in their usual all positive form, mod 2. */
GeneratorMatrix steane_standard() {
  const int xs[3][7] = {{1, 1, 1, 1, 0, 0, 0},
                        {0, 1, 1, 0, 1, 1, 0},
                        {0, 0, 1, 1, 0, 1, 1}};
  GeneratorMatrix m;
  m.n = 7;
  m.dim = ldikit::LocalDimension::prime(2);
  for (int r = 0; r < 3; ++r) {
    ldikit::PauliVector row(7);
    for (int c = 0; c < 7; ++c) row.x(c) = xs[r][c];
    m.append_row(row);
  }
  for (int r = 0; r < 3; ++r) {
    ldikit::PauliVector row(7);
    for (int c = 0; c < 7; ++c) row.z(c) = xs[r][c];
    m.append_row(row);
  }
  return m;
}

/* Deterministic small entries, full of sign changes, no rng needed. */
IntMatrix dense_test_matrix(int size) {
  IntMatrix a(size, size);
  long v = 1;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      a.at(i, j) = (v % 7) - 3;
      v = v * 31 + 17;
    }
  return a;
}

void BM_SmithNormalForm(benchmark::State &state) {
  const IntMatrix a = dense_test_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto s = ldikit::smith_normal_form(a);
    benchmark::DoNotOptimize(s.rank);
  }
}
/* Dense random matrices blow up interior entries fast; code generator
   matrices are sparse and tiny by comparison, so small sizes are the
   honest regime. */
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

void BM_MakeLdiCss(benchmark::State &state) {
  const GeneratorMatrix m = steane_standard();
  for (auto _ : state) {
    auto out = ldikit::make_ldi(m, 2, ldikit::LdiVariant::Css);
    benchmark::DoNotOptimize(out.rows.size());
  }
}
BENCHMARK(BM_MakeLdiCss);

void BM_MakeLdiLower(benchmark::State &state) {
  const GeneratorMatrix m = steane_standard();
  for (auto _ : state) {
    auto out = ldikit::make_ldi(m, 2, ldikit::LdiVariant::LowerTriangular);
    benchmark::DoNotOptimize(out.rows.size());
  }
}
BENCHMARK(BM_MakeLdiLower);

void BM_VerifyLdi(benchmark::State &state) {
  const GeneratorMatrix m = ldikit::toric_code(4).matrix;
  for (auto _ : state) {
    auto report = ldikit::verify_ldi(m);
    benchmark::DoNotOptimize(report.is_ldi);
  }
}
BENCHMARK(BM_VerifyLdi);

void BM_DistanceMod(benchmark::State &state) {
  const GeneratorMatrix m = ldikit::catalog_lookup("steane_ldi").matrix;
  const Int p(state.range(0));
  for (auto _ : state) {
    auto res = ldikit::distance_mod(m, p, 3);
    benchmark::DoNotOptimize(res.d.has_value());
  }
}
BENCHMARK(BM_DistanceMod)->Arg(2)->Arg(5);

} // namespace

BENCHMARK_MAIN();
