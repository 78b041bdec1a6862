#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace pfg {

/// Suffix array of an integer string with symbols in [0, upper], built by
/// induced sorting (SA-IS) in O(n) time.
std::vector<std::int64_t> suffix_array(std::span<const std::int32_t> symbols, std::int32_t upper);

/// Suffix array of a byte string under the reserved-character order.
std::vector<std::int64_t> suffix_array(std::string_view text);

/// Kasai et al. LCP array with LCP[0] = -1 and LCP[i] the common prefix
/// length of suffixes SA[i-1] and SA[i].
std::vector<std::int64_t> lcp_array(std::span<const std::int32_t> symbols, std::span<const std::int64_t> sa);

/// ISA[SA[i]] = i.
std::vector<std::int64_t> inverse(std::span<const std::int64_t> sa);

}  // namespace pfg
