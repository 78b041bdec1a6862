#include "pfg/suffix_table.hpp"

#include "pfg/alphabet.hpp"
#include "pfg/suffix_array.hpp"

namespace pfg {

SegmentJoin build_join(const PrefixFreeGraph& graph) {
    SegmentJoin join;
    std::size_t length = 1;
    for (const auto& s : graph.segments) length += s.size() + 1;
    join.text.reserve(length);
    join.boundaries.reserve(graph.segments.size());
    for (const auto& s : graph.segments) {
        join.boundaries.push_back(static_cast<std::int64_t>(join.text.size()));
        join.text += s;
        join.text += kSeparator;
    }
    join.text += kSentinel;
    return join;
}

SegmentAnnotation annotate_text_order(const SegmentJoin& join) {
    SegmentAnnotation ann;
    const std::size_t n = join.text.size();
    ann.id.resize(n);
    ann.pos.resize(n);
    SegmentId id = 0;
    std::int64_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ann.id[i] = id;
        ann.pos[i] = pos;
        if (join.text[i] == kSeparator) {
            ++id;
            pos = 0;
        } else {
            ++pos;
        }
    }
    return ann;
}

SegmentAnnotation annotate(const SegmentJoin& join, const std::vector<std::int64_t>& sa) {
    const auto text_order = annotate_text_order(join);
    SegmentAnnotation ann;
    ann.id.resize(sa.size());
    ann.pos.resize(sa.size());
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const auto p = static_cast<std::size_t>(sa[i]);
        ann.id[i] = text_order.id[p];
        ann.pos[i] = text_order.pos[p];
    }
    return ann;
}

SuffixTable build_suffix_table(const PrefixFreeGraph& graph) {
    const auto join = build_join(graph);
    const auto ranks = rank_text(join.text);
    SuffixTable table;
    table.sa = suffix_array(ranks, kRankAlphabetSize - 1);
    table.lcp = lcp_array(ranks, table.sa);
    auto ann = annotate(join, table.sa);
    table.id = std::move(ann.id);
    table.pos = std::move(ann.pos);
    return table;
}

}  // namespace pfg
