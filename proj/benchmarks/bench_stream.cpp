#include <benchmark/benchmark.h>

#include "bench_input.hpp"
#include "pfg/partition.hpp"
#include "pfg/sa_stream.hpp"

namespace {

void BM_Stream(benchmark::State& state) {
    const auto p = pfg::bench::mutated_copies(static_cast<int>(state.range(0)), 30'000);
    const auto g = pfg::build_graph(p, pfg::TriggerSet({"TAA", "TAG", "TGA"}));
    const auto table = pfg::build_suffix_table(g);
    const auto segments = pfg::assemble(g);
    const bool with_bwt = state.range(1) != 0;
    for (auto _ : state) {
        pfg::SaStream stream(g, table, segments, with_bwt);
        std::int64_t sum = 0;
        while (auto e = stream.next()) sum += e->sa;
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * p.total_length());
}
BENCHMARK(BM_Stream)->Args({16, 0})->Args({256, 0})->Args({256, 1})->Unit(benchmark::kMillisecond);

}  // namespace
