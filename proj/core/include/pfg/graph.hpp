#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pfg {

using SegmentId = std::int64_t;

struct Sequence {
    std::string name;
    std::string data;
};

/// An ordered collection of named sequences analyzed jointly.
struct Pangenome {
    std::vector<Sequence> sequences;

    std::int64_t total_length() const noexcept;

    /// Throws LoadError if a sequence is empty or contains a reserved character.
    void check() const;
};

struct Path {
    std::string name;
    std::vector<SegmentId> steps;

    friend bool operator==(const Path&, const Path&) = default;
};

/// Prefix-free graph in normalized form.
///
/// Segments are indexed by id and sorted lexicographically by content. Each
/// path spells one input sequence: consecutive segments overlap by exactly
/// `k` characters and the last segment of every path ends with `k` pads.
struct PrefixFreeGraph {
    std::size_t k = 0;
    std::vector<std::string> segments;
    std::vector<Path> paths;

    std::size_t segment_count() const noexcept { return segments.size(); }
    std::int64_t segment_length(SegmentId id) const noexcept {
        return static_cast<std::int64_t>(segments[static_cast<std::size_t>(id)].size());
    }
    std::string_view segment(SegmentId id) const noexcept {
        return segments[static_cast<std::size_t>(id)];
    }

    friend bool operator==(const PrefixFreeGraph&, const PrefixFreeGraph&) = default;
};

/// Old-id to new-id map that sorts `segments` lexicographically.
/// Throws StructuralError when two ids carry the same content.
std::vector<SegmentId> normalization_permutation(const std::vector<std::string>& segments);

/// Sorts segments, relabels ids by lexicographic rank and rewrites every path.
PrefixFreeGraph normalize(std::size_t k, std::vector<std::string> segments, std::vector<Path> paths);

/// Re-normalizes an existing graph (identity on an already normalized one).
PrefixFreeGraph normalize(PrefixFreeGraph graph);

enum class Severity { warning, error };

enum class Violation {
    unsorted_segments,
    short_segment,
    degenerate_segment,
    unknown_segment,
    empty_path,
    overlap_mismatch,
    not_prefix_free,
    missing_pad,
    misplaced_pad,
};

struct Diagnostic {
    Severity severity;
    Violation kind;
    SegmentId segment = -1;
    std::int64_t path = -1;
    std::int64_t step = -1;
    std::string message;
};

struct ValidationReport {
    std::vector<Diagnostic> diagnostics;

    bool ok() const noexcept;
    std::size_t error_count() const noexcept;
    std::size_t warning_count() const noexcept;
};

/// Checks every structural invariant. Length-k segments are reported as
/// warnings; everything else is an error.
ValidationReport validate(const PrefixFreeGraph& graph);

/// Spells path `path_index`: each segment minus its final k characters.
std::string reconstruct(const PrefixFreeGraph& graph, std::size_t path_index);

struct PangenomeOffsets {
    std::vector<std::int64_t> starts;  ///< start of each sequence in pangenome coordinates
    std::int64_t total = 0;            ///< N, the pangenome length
};

PangenomeOffsets pangenome_offsets(const PrefixFreeGraph& graph);

}  // namespace pfg
