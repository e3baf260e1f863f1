// Parallel batch evaluation against the serial reference, per suite.

#include <benchmark/benchmark.h>

#include "awdaha/suites.hpp"

using namespace awdaha;

namespace {

void run(benchmark::State& state, Suite s, Execution ex) {
  SuiteOptions o;
  o.samples = static_cast<int>(state.range(0));
  o.seed = 1;
  o.timing = false;
  std::vector<std::string> skipped;
  auto batches = build_batches(s, o, skipped);
  for (auto _ : state) benchmark::DoNotOptimize(run_batches(batches, ex, false));
  state.counters["batches"] = static_cast<double>(batches.size());
}

void BM_PolyParallel(benchmark::State& st) { run(st, Suite::aw_poly_identities, Execution::parallel); }
void BM_PolySerial(benchmark::State& st) { run(st, Suite::aw_poly_identities, Execution::serial); }
void BM_CrosscheckParallel(benchmark::State& st) { run(st, Suite::aw_func_crosscheck, Execution::parallel); }
void BM_CrosscheckSerial(benchmark::State& st) { run(st, Suite::aw_func_crosscheck, Execution::serial); }

}  // namespace

BENCHMARK(BM_PolyParallel)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolySerial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrosscheckParallel)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrosscheckSerial)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
