// Benchmarks for the hot paths of the exact pipeline: Fox Jacobian
// assembly, exact rank computation over a degree-6 number field, square
// roots in the field, and the full rigidity verdict.
//
// Inputs are read from the bundled data directory; set CUSPFORGE_DATA_DIR
// to override (defaults to "data" relative to the working directory).

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <string>

#include "cuspforge/cohomology.hpp"
#include "cuspforge/io.hpp"
#include "cuspforge/scalar.hpp"

using namespace cuspforge;

namespace {

std::string data_dir() {
  if (const char* d = std::getenv("CUSPFORGE_DATA_DIR")) return d;
  return "data";
}

const ManifoldInput& five_two() {
  static ManifoldInput in = load_manifold(data_dir() + "/5_2.json");
  return in;
}

void BM_fox_jacobian(benchmark::State& state) {
  const auto& in = five_two();
  for (auto _ : state) {
    auto j = fox_jacobian(in.rep, Module::V);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_fox_jacobian);

void BM_jacobian_rank(benchmark::State& state) {
  const auto& in = five_two();
  auto j = fox_jacobian(in.rep, Module::V);
  for (auto _ : state) {
    size_t r = rank(j);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_jacobian_rank);

void BM_field_sqrt(benchmark::State& state) {
  const auto& in = five_two();
  // trace of the product of the two generator images: a generic element
  // of the degree-6 field whose square has a root by construction.
  auto t = (in.rep.images[0] * in.rep.images[1]).trace();
  auto sq = FieldElem(t * t);
  for (auto _ : state) {
    auto r = scalar_sqrt(sq);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_field_sqrt);

void BM_rigidity_verdict(benchmark::State& state) {
  const auto& in = five_two();
  for (auto _ : state) {
    auto v = rigidity_verdict(in.rep);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_rigidity_verdict);

}  // namespace

BENCHMARK_MAIN();
