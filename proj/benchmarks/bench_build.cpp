#include <benchmark/benchmark.h>

#include "bench_input.hpp"
#include "pfg/partition.hpp"
#include "pfg/segment_table.hpp"
#include "pfg/suffix_table.hpp"

namespace {

const pfg::TriggerSet kStops({"TAA", "TAG", "TGA"});

void BM_BuildGraph(benchmark::State& state) {
    const auto p = pfg::bench::mutated_copies(static_cast<int>(state.range(0)), 30'000);
    for (auto _ : state) benchmark::DoNotOptimize(pfg::build_graph(p, kStops));
    state.SetBytesProcessed(state.iterations() * p.total_length());
}
BENCHMARK(BM_BuildGraph)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SuffixTable(benchmark::State& state) {
    const auto g = pfg::build_graph(pfg::bench::mutated_copies(static_cast<int>(state.range(0)), 30'000), kStops);
    for (auto _ : state) benchmark::DoNotOptimize(pfg::build_suffix_table(g));
}
BENCHMARK(BM_SuffixTable)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SegmentTable(benchmark::State& state) {
    const auto g = pfg::build_graph(pfg::bench::mutated_copies(static_cast<int>(state.range(0)), 30'000), kStops);
    for (auto _ : state) benchmark::DoNotOptimize(pfg::assemble(g));
}
BENCHMARK(BM_SegmentTable)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
