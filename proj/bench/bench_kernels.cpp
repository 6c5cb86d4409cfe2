// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include "janus/fock.hpp"
#include "janus/moments.hpp"
#include "janus/scan.hpp"
#include "janus/wigner.hpp"

#include <benchmark/benchmark.h>

using namespace janus;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

JanusSpec bench_spec() {
  JanusSpec s;
  s.chi = {0.8, 0.1};
  s.eta = {-0.5, 0.3};
  s.xi = {0.7, 0.4};
  s.zeta = {0.5, 2.0};
  s.alpha = Displacement::from_polar(1.3, 0.9);
  return normalize_weights(s);
}

void BM_displace_fock(benchmark::State& state) {
  const auto v = fock::squeezed_vacuum_fock({0.7, 0.4}, 300);
  for (auto _ : state) benchmark::DoNotOptimize(fock::displace_fock(v, Displacement({1.2, -0.4}), mode(state)));
}
BENCHMARK(BM_displace_fock)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_wigner_grid(benchmark::State& state) {
  const JanusSpec s = bench_spec();
  const GridExtents e = default_extents(s);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_grid(s, e, default_step(e), GridPart::total, mode(state)));
}
BENCHMARK(BM_wigner_grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_wigner_grid_fock(benchmark::State& state) {
  const JanusSpec s = bench_spec();
  const auto v = fock::build_janus_fock_auto(s);
  const GridExtents e = default_extents(s);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_grid_fock(v, e, 0.1, mode(state)));
}
BENCHMARK(BM_wigner_grid_fock)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_scan(benchmark::State& state) {
  ScanSpec spec;
  spec.base = bench_spec();
  spec.axis1 = parse_axis("alpha_mag:0:2:24");
  spec.axis2 = parse_axis("r:0.05:1.2:24");
  spec.quantity = parse_quantity("gk:3");
  for (auto _ : state) benchmark::DoNotOptimize(scan(spec, mode(state)));
}
BENCHMARK(BM_scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
