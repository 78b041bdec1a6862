#include "pfg/graph.hpp"

#include <algorithm>
#include <numeric>

#include "pfg/alphabet.hpp"
#include "pfg/error.hpp"

namespace pfg {

std::int64_t Pangenome::total_length() const noexcept {
    std::int64_t total = 0;
    for (const auto& s : sequences) total += static_cast<std::int64_t>(s.data.size());
    return total;
}

void Pangenome::check() const {
    for (const auto& s : sequences) {
        if (s.data.empty()) throw LoadError("empty sequence '" + s.name + "'");
        auto bad = std::find_if(s.data.begin(), s.data.end(), is_reserved);
        if (bad != s.data.end()) {
            throw LoadError("sequence '" + s.name + "' contains reserved character '" +
                            std::string(1, *bad) + "' at offset " +
                            std::to_string(bad - s.data.begin()));
        }
    }
}

std::vector<SegmentId> normalization_permutation(const std::vector<std::string>& segments) {
    std::vector<SegmentId> order(segments.size());
    std::iota(order.begin(), order.end(), SegmentId{0});
    std::sort(order.begin(), order.end(), [&](SegmentId a, SegmentId b) {
        return rank_less(segments[static_cast<std::size_t>(a)], segments[static_cast<std::size_t>(b)]);
    });

    std::vector<SegmentId> rank(segments.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && segments[static_cast<std::size_t>(order[r])] ==
                         segments[static_cast<std::size_t>(order[r - 1])]) {
            throw StructuralError("duplicate segment content under ids " + std::to_string(order[r - 1]) +
                                  " and " + std::to_string(order[r]));
        }
        rank[static_cast<std::size_t>(order[r])] = static_cast<SegmentId>(r);
    }
    return rank;
}

PrefixFreeGraph normalize(std::size_t k, std::vector<std::string> segments, std::vector<Path> paths) {
    if (segments.empty()) throw StructuralError("graph has no segments");
    const auto rank = normalization_permutation(segments);

    PrefixFreeGraph graph;
    graph.k = k;
    graph.segments.resize(segments.size());
    for (std::size_t old = 0; old < segments.size(); ++old) {
        graph.segments[static_cast<std::size_t>(rank[old])] = std::move(segments[old]);
    }
    for (auto& path : paths) {
        for (auto& step : path.steps) {
            if (step < 0 || static_cast<std::size_t>(step) >= rank.size()) {
                throw StructuralError("path '" + path.name + "' references unknown segment " +
                                      std::to_string(step));
            }
            step = rank[static_cast<std::size_t>(step)];
        }
    }
    graph.paths = std::move(paths);
    return graph;
}

PrefixFreeGraph normalize(PrefixFreeGraph graph) {
    return normalize(graph.k, std::move(graph.segments), std::move(graph.paths));
}

bool ValidationReport::ok() const noexcept { return error_count() == 0; }

std::size_t ValidationReport::error_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(diagnostics.begin(), diagnostics.end(),
                                                  [](const Diagnostic& d) { return d.severity == Severity::error; }));
}

std::size_t ValidationReport::warning_count() const noexcept {
    return diagnostics.size() - error_count();
}

namespace {

bool ends_with_pads(std::string_view s, std::size_t k) {
    if (s.size() < k) return false;
    return std::all_of(s.end() - static_cast<std::ptrdiff_t>(k), s.end(), [](char c) { return c == kPad; });
}

}  // namespace

ValidationReport validate(const PrefixFreeGraph& graph) {
    ValidationReport report;
    auto add = [&](Severity sev, Violation kind, SegmentId seg, std::int64_t path, std::int64_t step,
                   std::string msg) {
        report.diagnostics.push_back({sev, kind, seg, path, step, std::move(msg)});
    };

    const std::size_t k = graph.k;
    const auto n = static_cast<SegmentId>(graph.segments.size());

    // Segment-level checks.
    for (SegmentId id = 0; id < n; ++id) {
        const std::string_view s = graph.segment(id);
        if (id > 0 && !rank_less(graph.segment(id - 1), s)) {
            add(Severity::error, Violation::unsorted_segments, id, -1, -1,
                "segment " + std::to_string(id) + " is not strictly greater than its predecessor");
        }
        if (s.size() < k || s.empty()) {
            add(Severity::error, Violation::short_segment, id, -1, -1,
                "segment " + std::to_string(id) + " is shorter than k");
        } else if (s.size() == k) {
            add(Severity::warning, Violation::degenerate_segment, id, -1, -1,
                "segment " + std::to_string(id) + " has length k");
        }
        const auto first_pad = s.find(kPad);
        if (first_pad != std::string_view::npos &&
            (s.size() - first_pad != k || !ends_with_pads(s, k))) {
            add(Severity::error, Violation::misplaced_pad, id, -1, -1,
                "segment " + std::to_string(id) + " has pads other than a trailing run of k");
        }
    }

    // Prefix-freeness of segment suffixes longer than k; a proper prefix
    // relation among a sorted set always shows up between neighbours.
    // Equal suffixes from different segments collapse to one set element.
    std::vector<std::pair<std::string_view, SegmentId>> suffixes;
    for (SegmentId id = 0; id < n; ++id) {
        const std::string_view s = graph.segment(id);
        for (std::size_t p = 0; p + k < s.size(); ++p) suffixes.emplace_back(s.substr(p), id);
    }
    std::sort(suffixes.begin(), suffixes.end());
    for (std::size_t i = 1; i < suffixes.size(); ++i) {
        const auto& [a, id_a] = suffixes[i - 1];
        const auto& [b, id_b] = suffixes[i];
        if (a.size() < b.size() && b.substr(0, a.size()) == a) {
            add(Severity::error, Violation::not_prefix_free, id_b, -1, -1,
                "suffix '" + std::string(a) + "' of segment " + std::to_string(id_a) +
                    " is a prefix of suffix '" + std::string(b) + "' of segment " + std::to_string(id_b));
        }
    }

    // Path-level checks.
    for (std::size_t j = 0; j < graph.paths.size(); ++j) {
        const auto& steps = graph.paths[j].steps;
        const auto pj = static_cast<std::int64_t>(j);
        if (steps.empty()) {
            add(Severity::error, Violation::empty_path, -1, pj, -1, "path '" + graph.paths[j].name + "' is empty");
            continue;
        }
        bool resolved = true;
        for (std::size_t t = 0; t < steps.size(); ++t) {
            if (steps[t] < 0 || steps[t] >= n) {
                add(Severity::error, Violation::unknown_segment, steps[t], pj, static_cast<std::int64_t>(t),
                    "path '" + graph.paths[j].name + "' references unknown segment " + std::to_string(steps[t]));
                resolved = false;
            }
        }
        if (!resolved) continue;

        for (std::size_t t = 0; t < steps.size(); ++t) {
            const std::string_view s = graph.segment(steps[t]);
            const bool last = t + 1 == steps.size();
            if (last && !ends_with_pads(s, k)) {
                add(Severity::error, Violation::missing_pad, steps[t], pj, static_cast<std::int64_t>(t),
                    "last segment of path '" + graph.paths[j].name + "' does not end with k pads");
            }
            if (!last && s.find(kPad) != std::string_view::npos) {
                add(Severity::error, Violation::misplaced_pad, steps[t], pj, static_cast<std::int64_t>(t),
                    "padded segment used before the end of path '" + graph.paths[j].name + "'");
            }
            if (t == 0) continue;
            const std::string_view prev = graph.segment(steps[t - 1]);
            if (prev.size() < k || s.size() < k || prev.substr(prev.size() - k) != s.substr(0, k)) {
                add(Severity::error, Violation::overlap_mismatch, steps[t], pj, static_cast<std::int64_t>(t),
                    "segments " + std::to_string(steps[t - 1]) + " and " + std::to_string(steps[t]) +
                        " do not overlap by k characters");
            }
        }
    }
    return report;
}

std::string reconstruct(const PrefixFreeGraph& graph, std::size_t path_index) {
    std::string out;
    for (SegmentId id : graph.paths.at(path_index).steps) {
        const std::string_view s = graph.segment(id);
        out.append(s.substr(0, s.size() - graph.k));
    }
    return out;
}

PangenomeOffsets pangenome_offsets(const PrefixFreeGraph& graph) {
    PangenomeOffsets offsets;
    offsets.starts.reserve(graph.paths.size());
    const auto k = static_cast<std::int64_t>(graph.k);
    for (const auto& path : graph.paths) {
        offsets.starts.push_back(offsets.total);
        for (SegmentId id : path.steps) offsets.total += graph.segment_length(id) - k;
    }
    return offsets;
}

}  // namespace pfg
