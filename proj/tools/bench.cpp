// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <sstream>

#include "ucr/cli.hpp"
#include "ucr/oracle.hpp"
#include "ucr/zeros.hpp"

using namespace ucr;

namespace {

const UcTarget kTargets[] = {
    {QBesselParams{QKind::Jackson2, 1.0, 0.5}, Norm::G},
    {QBesselParams{QKind::Jackson3, 1.5, 0.8}, Norm::F},
    {WrightParams{1.0, 1.0}, Norm::H},
};

void BM_MarginParallel(benchmark::State& st) {
  const UcTarget& t = kTargets[st.range(0)];
  for (auto _ : st) benchmark::DoNotOptimize(uc_margin(t, 0.2).min_margin);
}

void BM_MarginSerial(benchmark::State& st) {
  const UcTarget& t = kTargets[st.range(0)];
  for (auto _ : st) benchmark::DoNotOptimize(uc_margin_serial(t, 0.2).min_margin);
}

cli::JobSpec small_sweep(bool serial) {
  cli::JobSpec s;
  s.command = "sweep";
  s.family = "all";
  s.nus = {0.5, 1.0};
  s.qs = {0.5};
  s.rhos = {1.0};
  s.betas = {1.0, 2.0};
  s.serial = serial;
  return s;
}

void BM_Sweep(benchmark::State& st) {
  const cli::JobSpec spec = small_sweep(st.range(0) == 1);
  for (auto _ : st) {
    std::ostringstream out, err;
    benchmark::DoNotOptimize(cli::run_job(spec, out, err));
  }
  st.SetLabel(spec.serial ? "serial" : "parallel");
}

void BM_ZeroScan(benchmark::State& st) {
  const ZeroTarget t{QBesselParams{QKind::Jackson2, 1.0, 0.5}, ZeroKind::Function};
  for (auto _ : st) benchmark::DoNotOptimize(scan_and_refine(t, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_MarginParallel)->DenseRange(0, 2);
BENCHMARK(BM_MarginSerial)->DenseRange(0, 2);
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZeroScan)->Arg(10)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
