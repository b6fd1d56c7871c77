#include "g5/catalog.hpp"
#include "g5/colorer.hpp"
#include "g5/discharging.hpp"
#include "g5/harness.hpp"
#include "g5/io.hpp"
#include "g5/reducer.hpp"
#include "g5/weights.hpp"

#include <benchmark/benchmark.h>

using namespace g5;

namespace {

EmbeddedGraph fixture(const char* name) { return read_graph_file(std::string(G5_FIXTURES) + "/" + name + ".g5").graph; }

void BM_Enumerate(benchmark::State& st) {
  int l = static_cast<int>(st.range(0)), n = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_corpus({l, n, 5, false}).size());
}
BENCHMARK(BM_Enumerate)->Args({8, 11})->Args({5, 12})->Unit(benchmark::kMillisecond);

void BM_CanonicalCode(benchmark::State& st) {
  auto g = fixture("prism_subdivided");
  for (auto _ : st) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode);

void BM_OracleExtend(benchmark::State& st) {
  auto g = fixture("e2");
  auto phis = ring_precolorings(g, true);
  for (auto _ : st)
    for (const auto& phi : phis) benchmark::DoNotOptimize(oracle_extend(g, phi));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(phis.size()));
}
BENCHMARK(BM_OracleExtend);

void BM_SolveDisk(benchmark::State& st) {
  auto g = canonical_host(configuration("R3")).graph;
  auto phis = ring_precolorings(g);
  for (auto _ : st)
    for (const auto& phi : phis) benchmark::DoNotOptimize(solve_disk(g, phi, 0));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(phis.size()));
}
BENCHMARK(BM_SolveDisk)->Unit(benchmark::kMillisecond);

void BM_FindAppearances(benchmark::State& st) {
  auto g = canonical_host(configuration("R5")).graph;
  for (auto _ : st) benchmark::DoNotOptimize(find_appearances(g, Strength::Faint).size());
}
BENCHMARK(BM_FindAppearances)->Unit(benchmark::kMillisecond);

void BM_Reduce(benchmark::State& st) {
  auto g = canonical_host(configuration("R3")).graph;
  auto as = find_appearances(g, Strength::Strong);
  if (as.empty()) {
    st.SkipWithError("no strong appearance");
    return;
  }
  for (auto _ : st) benchmark::DoNotOptimize(reduce(g, as[0]).graph.n());
}
BENCHMARK(BM_Reduce);

void BM_AuditCharges(benchmark::State& st) {
  auto g = fixture("hexprism");
  auto w = default_weight_fn();
  auto M = capture_4cycles(g);
  for (auto _ : st) benchmark::DoNotOptimize(audit_charges(g, M, w.epsilon(), w).ok());
}
BENCHMARK(BM_AuditCharges)->Unit(benchmark::kMillisecond);

void BM_IsRCritical(benchmark::State& st) {
  auto g = fixture("e2");
  for (auto _ : st) benchmark::DoNotOptimize(is_R_critical(g).verdict);
}
BENCHMARK(BM_IsRCritical)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
