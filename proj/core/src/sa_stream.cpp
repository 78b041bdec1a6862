#include "pfg/sa_stream.hpp"

#include <algorithm>

#include "pfg/error.hpp"

namespace pfg {

std::int64_t segment_suffix_length(const SuffixTable& table, const SegmentTable& segments, std::size_t row) {
    const SegmentId id = table.id[row];
    if (static_cast<std::size_t>(id) >= segments.segment_count()) return 0;
    return segments.length(id) - table.pos[row];
}

bool is_skipped(const SuffixTable& table, const SegmentTable& segments, std::size_t k, std::size_t row) {
    return segment_suffix_length(table, segments, row) <= static_cast<std::int64_t>(k);
}

std::size_t block_end(const SuffixTable& table, const SegmentTable& segments, std::size_t k, std::size_t start) {
    const std::int64_t length = segment_suffix_length(table, segments, start);
    std::size_t end = start + 1;
    while (end < table.size() && !is_skipped(table, segments, k, end) && table.lcp[end] >= length) {
        if (segment_suffix_length(table, segments, end) != length) {
            throw StructuralError("suffix-table rows " + std::to_string(start) + " and " + std::to_string(end) +
                                  " share a prefix but differ in segment suffix length");
        }
        ++end;
    }
    return end;
}

char derive_bwt(const PrefixFreeGraph& graph, SegmentId id, std::int64_t pos, const Occurrence& occ) {
    if (pos > 0) return graph.segment(id)[static_cast<std::size_t>(pos - 1)];
    return occ.prev;
}

void BlockMerger::reset(const SuffixTable& table, const SegmentTable& segments, std::size_t begin, std::size_t end) {
    heap_.clear();
    for (std::size_t row = begin; row < end; ++row) {
        const auto occ = segments.occurrences(table.id[row]);
        if (!occ.empty()) heap_.push_back({occ.data(), occ.data() + occ.size(), row});
    }
    std::make_heap(heap_.begin(), heap_.end(),
                   [](const Cursor& a, const Cursor& b) { return a.current->rank > b.current->rank; });
}

std::optional<BlockMerger::Item> BlockMerger::next() {
    if (heap_.empty()) return std::nullopt;
    const auto greater = [](const Cursor& a, const Cursor& b) { return a.current->rank > b.current->rank; };
    std::pop_heap(heap_.begin(), heap_.end(), greater);
    Cursor& top = heap_.back();
    const Item item{top.row, top.current};
    if (++top.current == top.last) {
        heap_.pop_back();
    } else {
        std::push_heap(heap_.begin(), heap_.end(), greater);
    }
    return item;
}

SaStream::SaStream(const PrefixFreeGraph& graph, const SuffixTable& table, const SegmentTable& segments,
                   bool with_bwt)
    : graph_(&graph), table_(&table), segments_(&segments), k_(graph.k), with_bwt_(with_bwt) {}

std::optional<Emission> SaStream::next() {
    while (merger_.empty()) {
        while (row_ < table_->size() && is_skipped(*table_, *segments_, k_, row_)) ++row_;
        if (row_ >= table_->size()) return std::nullopt;
        const std::size_t end = block_end(*table_, *segments_, k_, row_);
        merger_.reset(*table_, *segments_, row_, end);
        row_ = end;
    }
    const auto item = merger_.next();
    Emission e;
    e.index = index_++;
    e.id = table_->id[item->row];
    e.pos = table_->pos[item->row];
    e.sa = item->occurrence->start + e.pos;
    if (with_bwt_) e.bwt = derive_bwt(*graph_, e.id, e.pos, *item->occurrence);
    return e;
}

std::vector<Emission> collect(const PrefixFreeGraph& graph, bool with_bwt) {
    const auto table = build_suffix_table(graph);
    const auto segments = assemble(graph);
    SaStream stream(graph, table, segments, with_bwt);
    std::vector<Emission> out;
    while (auto e = stream.next()) out.push_back(*e);
    return out;
}

}  // namespace pfg
