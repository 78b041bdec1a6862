#pragma once

#include <istream>
#include <string>
#include <vector>

#include "pfg/aho_corasick.hpp"
#include "pfg/graph.hpp"

namespace pfg {

/// Reads a FASTA collection. Names are the header up to the first
/// whitespace; wrapped lines are joined and uppercased; CRLF is accepted.
/// Throws LoadError (with line number) on an empty record, a reserved
/// character, data before the first header, or an input with no records.
Pangenome read_fasta(std::istream& in);

/// One trigger word per line; blank lines and '#' comments are ignored.
std::vector<std::string> read_trigger_words(std::istream& in);

/// read_trigger_words followed by TriggerSet validation.
TriggerSet read_triggers(std::istream& in);

}  // namespace pfg
