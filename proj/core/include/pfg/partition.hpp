#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pfg/aho_corasick.hpp"
#include "pfg/graph.hpp"

namespace pfg {

/// Splits `seq` at trigger occurrences.
///
/// Every occurrence closes a segment running from the current boundary to
/// the occurrence end; the occurrence start becomes the next boundary. The
/// final segment runs to the end of `seq` followed by k pad characters, so
/// consecutive segments overlap by exactly k characters.
std::vector<std::string> partition_sequence(std::string_view seq, const MatchAutomaton& automaton);

/// Partitions every sequence, deduplicates segments by content in
/// first-seen order and returns the normalized graph. Throws
/// StructuralError if the result fails validation.
PrefixFreeGraph build_graph(const Pangenome& pangenome, const TriggerSet& triggers);

}  // namespace pfg
