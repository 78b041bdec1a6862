#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pfg/graph.hpp"

namespace pfg {

/// All paths concatenated over the integer alphabet END < SEP < ids.
/// Segment id i is stored as symbol i + 2.
struct PathJoin {
    static constexpr std::int32_t kEnd = 0;
    static constexpr std::int32_t kSep = 1;
    static constexpr std::int32_t symbol_of(SegmentId id) noexcept { return static_cast<std::int32_t>(id) + 2; }

    struct Origin {
        std::int64_t path = -1;  ///< -1 for SEP and END
        std::int64_t step = -1;
    };

    std::vector<std::int32_t> symbols;
    std::vector<Origin> origins;
    std::int32_t upper = 1;  ///< largest symbol value
};

PathJoin build_path_join(const PrefixFreeGraph& graph);

/// starts[j][t] is the pangenome offset where step t of path j begins.
std::vector<std::vector<std::int64_t>> occurrence_starts(const PrefixFreeGraph& graph);

/// rank[i] = ISA[i + 1] of the path join for every segment symbol i, or -1
/// at SEP/END positions.
std::vector<std::int64_t> right_context_ranks(const PathJoin& join);

/// Character preceding each occurrence in its sequence, or '$' when the
/// occurrence begins the sequence. Computed from segment contents only.
std::vector<std::vector<char>> preceding_chars(const PrefixFreeGraph& graph);

struct Occurrence {
    std::int64_t start;  ///< pangenome offset
    std::int64_t rank;   ///< right-context rank, globally unique
    char prev;           ///< preceding pangenome character or '$'

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Per segment: its length and every occurrence, sorted by ascending rank.
/// Occurrences are stored contiguously, grouped by segment id.
class SegmentTable {
public:
    SegmentTable() = default;
    SegmentTable(std::vector<std::int64_t> lengths, std::vector<std::size_t> offsets,
                 std::vector<Occurrence> occurrences)
        : lengths_(std::move(lengths)), offsets_(std::move(offsets)), occurrences_(std::move(occurrences)) {}

    std::size_t segment_count() const noexcept { return lengths_.size(); }
    std::int64_t length(SegmentId id) const noexcept { return lengths_[static_cast<std::size_t>(id)]; }
    const std::vector<std::int64_t>& lengths() const noexcept { return lengths_; }

    std::span<const Occurrence> occurrences(SegmentId id) const noexcept {
        const auto u = static_cast<std::size_t>(id);
        return {occurrences_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
    }
    std::size_t total_occurrences() const noexcept { return occurrences_.size(); }

private:
    std::vector<std::int64_t> lengths_;
    std::vector<std::size_t> offsets_;
    std::vector<Occurrence> occurrences_;
};

SegmentTable assemble(const PrefixFreeGraph& graph);

}  // namespace pfg
