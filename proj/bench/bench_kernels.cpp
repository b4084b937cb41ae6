// Serial reference vs OpenMP variants of the hot loops.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <initializer_list>
#include <numeric>

#include "cubica/group.hpp"
#include "cubica/incidence.hpp"
#include "cubica/kernels.hpp"
#include "cubica/workbench.hpp"

namespace {

using namespace cubica;

const Workbench& bench_for(int q) {
  static std::map<int, std::unique_ptr<Workbench>> cache;
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<Workbench>(q);
  return *slot;
}

kernels::Exec exec_of(const benchmark::State& state) {
  return state.range(1) ? kernels::Exec::Parallel : kernels::Exec::Serial;
}

void BM_LinePencils(benchmark::State& state) {
  const auto& wb = bench_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::line_pencils(wb.space(), exec_of(state)));
  state.counters["lines"] = static_cast<double>(wb.space().num_lines());
}

void BM_MaxRowOverlap(benchmark::State& state) {
  const auto& wb = bench_for(static_cast<int>(state.range(0)));
  const auto m = wb.submatrix({classify::PlaneType::ZeroC, classify::LineType::EnGamma, 0});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::max_row_overlap(m.bits, exec_of(state)));
  state.counters["rows"] = static_cast<double>(m.bits.rows());
}

void BM_LineOrbits(benchmark::State& state) {
  const auto& wb = bench_for(static_cast<int>(state.range(0)));
  std::vector<std::uint32_t> all(wb.space().num_lines());
  std::iota(all.begin(), all.end(), 0u);
  for (auto _ : state) benchmark::DoNotOptimize(group::line_orbits(wb.group(), all, exec_of(state)));
}

void BM_Submatrix(benchmark::State& state) {
  const auto& wb = bench_for(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(incidence::build_submatrix(
        wb.taxonomy(), wb.pencils(), {classify::PlaneType::ThreeC, classify::LineType::EnGamma, 0}, exec_of(state)));
}

void sizes(benchmark::internal::Benchmark* b, std::initializer_list<int> qs) {
  b->ArgNames({"q", "parallel"});
  for (int q : qs)
    for (int par : {0, 1}) b->Args({q, par});
  b->Unit(benchmark::kMillisecond);
}

void args(benchmark::internal::Benchmark* b) { sizes(b, {7, 11, 13}); }
void small_args(benchmark::internal::Benchmark* b) { sizes(b, {5, 7, 9}); }

}  // namespace

BENCHMARK(BM_LinePencils)->Apply(args);
BENCHMARK(BM_MaxRowOverlap)->Apply(small_args);
BENCHMARK(BM_LineOrbits)->Apply(args);
BENCHMARK(BM_Submatrix)->Apply(args);

BENCHMARK_MAIN();
