#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pfg/graph.hpp"

namespace pfg::oracle {

// Brute-force ground truth for the pangenome suffix array and BWT. Sorts
// every suffix of the padded concatenation directly, so it is quadratic in
// the worst case and meant for inputs of at most a few tens of kilobytes.

inline constexpr std::int64_t kMaxOracleLength = 50'000;

/// seq_0 pads seq_1 pads ... seq_{m-1} pads, with k pads per sequence.
std::string padded_text(const Pangenome& pangenome, std::size_t k);

/// Pangenome offsets sorted by the suffix of the padded text starting there.
std::vector<std::int64_t> oracle_sa(const Pangenome& pangenome, std::size_t k);

/// Preceding character of each entry, '$' at sequence starts.
std::string oracle_bwt(const Pangenome& pangenome, const std::vector<std::int64_t>& sa);

}  // namespace pfg::oracle
