#include "pfg/segment_table.hpp"

#include <algorithm>

#include "pfg/alphabet.hpp"
#include "pfg/suffix_array.hpp"

namespace pfg {

PathJoin build_path_join(const PrefixFreeGraph& graph) {
    PathJoin join;
    std::size_t length = 1;
    for (const auto& p : graph.paths) length += p.steps.size() + 1;
    join.symbols.reserve(length);
    join.origins.reserve(length);
    for (std::size_t j = 0; j < graph.paths.size(); ++j) {
        const auto& steps = graph.paths[j].steps;
        for (std::size_t t = 0; t < steps.size(); ++t) {
            join.symbols.push_back(PathJoin::symbol_of(steps[t]));
            join.origins.push_back({static_cast<std::int64_t>(j), static_cast<std::int64_t>(t)});
        }
        join.symbols.push_back(PathJoin::kSep);
        join.origins.push_back({});
    }
    join.symbols.push_back(PathJoin::kEnd);
    join.origins.push_back({});
    join.upper = PathJoin::symbol_of(static_cast<SegmentId>(graph.segment_count()) - 1);
    return join;
}

std::vector<std::vector<std::int64_t>> occurrence_starts(const PrefixFreeGraph& graph) {
    const auto k = static_cast<std::int64_t>(graph.k);
    std::vector<std::vector<std::int64_t>> starts(graph.paths.size());
    std::int64_t offset = 0;
    for (std::size_t j = 0; j < graph.paths.size(); ++j) {
        starts[j].reserve(graph.paths[j].steps.size());
        for (SegmentId id : graph.paths[j].steps) {
            starts[j].push_back(offset);
            offset += graph.segment_length(id) - k;
        }
    }
    return starts;
}

std::vector<std::int64_t> right_context_ranks(const PathJoin& join) {
    const auto sa = suffix_array(join.symbols, join.upper);
    const auto isa = inverse(sa);
    std::vector<std::int64_t> ranks(join.symbols.size(), -1);
    for (std::size_t i = 0; i + 1 < join.symbols.size(); ++i) {
        if (join.symbols[i] > PathJoin::kSep) ranks[i] = isa[i + 1];
    }
    return ranks;
}

std::vector<std::vector<char>> preceding_chars(const PrefixFreeGraph& graph) {
    const std::size_t k = graph.k;
    std::vector<std::vector<char>> prev(graph.paths.size());
    for (std::size_t j = 0; j < graph.paths.size(); ++j) {
        const auto& steps = graph.paths[j].steps;
        prev[j].reserve(steps.size());
        // Last character spelled so far; a length-k segment spells nothing.
        char last = kSentinel;
        for (SegmentId id : steps) {
            prev[j].push_back(last);
            const std::string_view s = graph.segment(id);
            if (s.size() > k) last = s[s.size() - k - 1];
        }
    }
    return prev;
}

SegmentTable assemble(const PrefixFreeGraph& graph) {
    const auto join = build_path_join(graph);
    const auto ranks = right_context_ranks(join);
    const auto starts = occurrence_starts(graph);
    const auto prev = preceding_chars(graph);

    const std::size_t segments = graph.segment_count();
    std::vector<std::int64_t> lengths(segments);
    for (std::size_t id = 0; id < segments; ++id) lengths[id] = graph.segment_length(static_cast<SegmentId>(id));

    std::vector<std::size_t> offsets(segments + 1, 0);
    for (const auto& p : graph.paths) {
        for (SegmentId id : p.steps) ++offsets[static_cast<std::size_t>(id) + 1];
    }
    for (std::size_t id = 0; id < segments; ++id) offsets[id + 1] += offsets[id];

    std::vector<Occurrence> occurrences(offsets.back());
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < join.symbols.size(); ++i) {
        const auto& origin = join.origins[i];
        if (origin.path < 0) continue;
        const auto j = static_cast<std::size_t>(origin.path);
        const auto t = static_cast<std::size_t>(origin.step);
        const auto id = static_cast<std::size_t>(graph.paths[j].steps[t]);
        occurrences[fill[id]++] = {starts[j][t], ranks[i], prev[j][t]};
    }
    for (std::size_t id = 0; id < segments; ++id) {
        std::sort(occurrences.begin() + static_cast<std::ptrdiff_t>(offsets[id]),
                  occurrences.begin() + static_cast<std::ptrdiff_t>(offsets[id + 1]),
                  [](const Occurrence& a, const Occurrence& b) { return a.rank < b.rank; });
    }
    return SegmentTable(std::move(lengths), std::move(offsets), std::move(occurrences));
}

}  // namespace pfg
