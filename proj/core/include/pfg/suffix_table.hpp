#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pfg/graph.hpp"

namespace pfg {

/// All segments in id order, each followed by '#', then a final '$'.
struct SegmentJoin {
    std::string text;
    std::vector<std::int64_t> boundaries;  ///< start of each segment in `text`
};

SegmentJoin build_join(const PrefixFreeGraph& graph);

/// Per join position, the segment it belongs to and the offset inside it.
/// A separator takes the preceding segment's id with offset equal to that
/// segment's length; the final '$' takes id = segment count, offset 0.
struct SegmentAnnotation {
    std::vector<SegmentId> id;
    std::vector<std::int64_t> pos;
};

/// Text-order annotation of the join (before permuting by the ISA).
SegmentAnnotation annotate_text_order(const SegmentJoin& join);

/// Annotation permuted into suffix-array order.
SegmentAnnotation annotate(const SegmentJoin& join, const std::vector<std::int64_t>& sa);

/// Suffix array, LCP, segment id and in-segment position of every suffix of
/// the segment join, stored as parallel arrays in sorted-suffix order.
struct SuffixTable {
    std::vector<std::int64_t> sa;
    std::vector<std::int64_t> lcp;
    std::vector<SegmentId> id;
    std::vector<std::int64_t> pos;

    std::size_t size() const noexcept { return sa.size(); }
};

SuffixTable build_suffix_table(const PrefixFreeGraph& graph);

}  // namespace pfg
