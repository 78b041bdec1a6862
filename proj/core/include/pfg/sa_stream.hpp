#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "pfg/graph.hpp"
#include "pfg/segment_table.hpp"
#include "pfg/suffix_table.hpp"

namespace pfg {

/// One suffix-array entry of the pangenome.
struct Emission {
    std::int64_t index = 0;  ///< running counter, 0-based
    std::int64_t sa = 0;     ///< pangenome offset of the suffix
    SegmentId id = 0;        ///< segment the suffix starts in
    std::int64_t pos = 0;    ///< offset inside that segment
    std::optional<char> bwt;

    friend bool operator==(const Emission&, const Emission&) = default;
};

/// Length of the segment suffix at `row`; 0 for '#' and '$' rows.
std::int64_t segment_suffix_length(const SuffixTable& table, const SegmentTable& segments, std::size_t row);

/// True for '$' and '#' rows and for rows whose segment suffix is at most k
/// characters long (trigger tails and pads, reported by the next segment).
bool is_skipped(const SuffixTable& table, const SegmentTable& segments, std::size_t k, std::size_t row);

/// One past the last row of the block starting at reported row `start`.
/// Row r joins the block of r - 1 iff r is reported and LCP[r] >= L(r - 1).
/// Throws StructuralError if members disagree on suffix length, which can
/// only happen when the segment suffixes are not prefix-free.
std::size_t block_end(const SuffixTable& table, const SegmentTable& segments, std::size_t k, std::size_t start);

/// BWT character for an emission drawn from occurrence `occ`.
char derive_bwt(const PrefixFreeGraph& graph, SegmentId id, std::int64_t pos, const Occurrence& occ);

/// k-way merge of the rank-sorted occurrence lists of one block.
class BlockMerger {
public:
    void reset(const SuffixTable& table, const SegmentTable& segments, std::size_t begin, std::size_t end);

    struct Item {
        std::size_t row;
        const Occurrence* occurrence;
    };
    std::optional<Item> next();

    bool empty() const noexcept { return heap_.empty(); }
    std::size_t capacity() const noexcept { return heap_.capacity(); }

private:
    struct Cursor {
        const Occurrence* current;
        const Occurrence* last;
        std::size_t row;
    };
    std::vector<Cursor> heap_;
};

/// Emits the entries of block [begin, end) in suffix order.
template <class F>
void emit_block(const PrefixFreeGraph& graph, const SuffixTable& table, const SegmentTable& segments,
                std::size_t begin, std::size_t end, bool with_bwt, F&& on_emission) {
    BlockMerger merger;
    merger.reset(table, segments, begin, end);
    std::int64_t index = 0;
    while (auto item = merger.next()) {
        Emission e;
        e.index = index++;
        e.id = table.id[item->row];
        e.pos = table.pos[item->row];
        e.sa = item->occurrence->start + e.pos;
        if (with_bwt) e.bwt = derive_bwt(graph, e.id, e.pos, *item->occurrence);
        on_emission(e);
    }
}

/// Forward stream over the pangenome suffix array.
///
/// Holds references to the graph and both tables; its own state is the row
/// cursor and a merge heap sized by the widest block seen. The tables must
/// outlive the stream. Single consumer.
class SaStream {
public:
    SaStream(const PrefixFreeGraph& graph, const SuffixTable& table, const SegmentTable& segments,
             bool with_bwt = false);

    std::optional<Emission> next();

    /// Entries emitted so far.
    std::int64_t emitted() const noexcept { return index_; }
    /// Largest merge heap capacity reached.
    std::size_t merge_capacity() const noexcept { return merger_.capacity(); }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Emission;
        using difference_type = std::ptrdiff_t;
        using pointer = const Emission*;
        using reference = const Emission&;

        iterator() = default;
        explicit iterator(SaStream* stream) : stream_(stream) { ++*this; }

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++() {
            if (auto e = stream_->next()) {
                current_ = *e;
            } else {
                stream_ = nullptr;
            }
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

    private:
        SaStream* stream_ = nullptr;
        Emission current_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return {}; }

private:
    const PrefixFreeGraph* graph_;
    const SuffixTable* table_;
    const SegmentTable* segments_;
    std::size_t k_;
    bool with_bwt_;
    std::size_t row_ = 0;
    std::int64_t index_ = 0;
    BlockMerger merger_;
};

/// Convenience: builds both tables and collects the whole stream.
std::vector<Emission> collect(const PrefixFreeGraph& graph, bool with_bwt = false);

}  // namespace pfg
