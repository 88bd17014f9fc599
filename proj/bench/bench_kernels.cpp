// Serial reference against the OpenMP kernels on corpus inputs.

#include <benchmark/benchmark.h>

#include "pbundle/bundle.hpp"
#include "pbundle/corpus.hpp"
#include "pbundle/loops.hpp"

using namespace pbundle;
using kernels::Exec;

namespace {

const SearchBudget budget(1'000'000'000);

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_HomSearch(benchmark::State& state, const char* complex, const char* group) {
  auto pres = edge_path_group(corpus::complex(complex));
  const auto& g = *corpus::group(group);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::hom_images_search(*pres->group, g, budget, exec_of(state)));
  label(state);
}

void BM_HomLiteral(benchmark::State& state, const char* complex, const char* group) {
  auto pres = edge_path_group(corpus::complex(complex));
  const auto& g = *corpus::group(group);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::hom_images_literal(*pres->group, g, budget, exec_of(state)));
  label(state);
}

void BM_CocycleSearch(benchmark::State& state, const char* complex, const char* group) {
  auto cells = cell_system(DeltaComplex::from_simplicial(corpus::complex(complex)));
  const auto& g = *corpus::group(group);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::cocycles_search(cells, g, budget, exec_of(state)));
  label(state);
}

void BM_GaugeOrbits(benchmark::State& state, const char* complex, const char* group) {
  auto cells = cell_system(DeltaComplex::from_simplicial(corpus::complex(complex)));
  const auto& g = *corpus::group(group);
  const auto all = kernels::cocycles_search(cells, g, budget, Exec::serial);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::gauge_orbit_count(cells, g, all, budget, exec_of(state)));
  label(state);
}

void BM_GaugeSearch(benchmark::State& state, const char* complex, const char* group) {
  auto cells = cell_system(DeltaComplex::from_simplicial(corpus::complex(complex)));
  const auto& g = *corpus::group(group);
  const auto all = kernels::cocycles_search(cells, g, budget, Exec::serial);
  const auto& from = all.back();
  std::vector<Elem> t(static_cast<std::size_t>(cells.vertices));
  for (std::size_t v = 0; v < t.size(); ++v) t[v] = static_cast<Elem>((v * 5 + 1) % g.order());
  const auto to = kernels::apply_gauge(cells, g, from, t);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::gauge_search(cells, g, from, to, budget, exec_of(state)));
  label(state);
}

}  // namespace

BENCHMARK_CAPTURE(BM_HomSearch, torus_S3, "torus", "S3")
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HomLiteral, figure_eight_S3, "figure_eight", "S3")
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CocycleSearch, torus_Z2xZ2, "torus", "Z2xZ2")
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CocycleSearch, rp2_S3, "rp2", "S3")
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GaugeOrbits, rp2_S3, "rp2", "S3")
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GaugeSearch, torus_S3, "torus", "S3")
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
