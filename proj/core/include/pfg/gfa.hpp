#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pfg/graph.hpp"

namespace pfg {

// Header tags written by write_gfa: `tl:i:<k>` records the trigger length,
// `tw:Z:<w1>,<w2>,...` the trigger words when known.

struct GfaSegment {
    std::string name;
    std::string sequence;
};

struct GfaLink {
    std::string from;
    std::string to;
    std::optional<std::int64_t> overlap;  ///< nullopt for '*'
};

struct GfaPath {
    std::string name;
    std::vector<std::size_t> steps;     ///< indices into GfaDocument::segments
    std::vector<std::int64_t> overlaps; ///< one per adjacent pair; empty when given as '*'
};

struct GfaDocument {
    std::string version;
    std::optional<std::size_t> k;
    std::vector<std::string> triggers;
    std::vector<GfaSegment> segments;
    std::vector<GfaLink> links;
    std::vector<GfaPath> paths;
};

/// Writes the graph as tab-separated GFA 1.0: header, S lines by id, L lines
/// for each distinct adjacent pair ordered by (from, to), P lines in input
/// order. Output depends only on the graph and `triggers`.
void write_gfa(const PrefixFreeGraph& graph, std::ostream& out, const std::vector<std::string>& triggers = {});

/// Tolerant GFA 1.0 reader. Unknown record types are ignored. Throws
/// LoadError with a line number on malformed S/P records, reverse-oriented
/// steps, or path steps naming an unknown segment.
GfaDocument read_gfa(std::istream& in);

/// Spells every path, eliding declared overlaps ('*' means 0). When the
/// document carries a trigger length, the trailing k pads are stripped.
/// Throws LoadError when a declared overlap disagrees with the sequences.
Pangenome expand_gfa_paths(const GfaDocument& doc);

/// Interprets a document written by write_gfa as a graph. Requires the
/// trigger-length tag, segment names 0..n-1 and overlaps equal to k. The
/// result is validated; errors throw StructuralError.
PrefixFreeGraph graph_from_gfa(const GfaDocument& doc);

}  // namespace pfg
