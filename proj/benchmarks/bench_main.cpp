#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "syzcurve/catalog.hpp"
#include "syzcurve/exactla.hpp"
#include "syzcurve/parse.hpp"

using namespace syzcurve;

namespace {

void BM_Classify(benchmark::State& state, const char* name) {
  HomogPoly f = catalog_entry(name).build().product();
  for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}

void BM_SingularPoints(benchmark::State& state, const char* name) {
  Arrangement a = catalog_entry(name).build();
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(a));
}

void BM_JacobianRank(benchmark::State& state) {
  HomogPoly f = catalog_entry("orchard12-1").build().product();
  const int r = static_cast<int>(state.range(0));
  Matrix m = jacobian_matrix(f, r);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_LocalMilnor(benchmark::State& state) {
  BivariatePoly g = parse_poly("x^4*z+y^5+x^2*y^3", NumberField::rationals()).dehomogenize(2);
  for (auto _ : state) benchmark::DoNotOptimize(local_milnor(g));
}

void BM_LeviIsomorphism(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LeviGraph g = cyclic_model(n).levi();
  // same structure under a shuffled labelling
  std::mt19937 rng(7);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  LeviGraph h = g;
  for (auto& p : h.points) {
    for (auto& v : p) v = perm[v];
    std::sort(p.begin(), p.end());
  }
  std::shuffle(h.points.begin(), h.points.end(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(levi_isomorphic(g, h));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Classify, triangle, "triangle");
BENCHMARK_CAPTURE(BM_Classify, wzz_1, "wzz-1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, triangular_1, "triangular-1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, orchard10_2, "orchard10-2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SingularPoints, wzz_1, "wzz-1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SingularPoints, st_1, "st-1")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobianRank)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalMilnor);
BENCHMARK(BM_LeviIsomorphism)->Arg(10)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
