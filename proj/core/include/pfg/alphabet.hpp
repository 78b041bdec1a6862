#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace pfg {

// Reserved characters, ranked below every input byte: $ < # < . < input.
inline constexpr char kSentinel = '$';
inline constexpr char kSeparator = '#';
inline constexpr char kPad = '.';

/// Number of distinct ranks produced by `char_rank`.
inline constexpr std::int32_t kRankAlphabetSize = 256 + 3;

constexpr bool is_reserved(char c) noexcept {
    return c == kSentinel || c == kSeparator || c == kPad;
}

constexpr std::int32_t char_rank(char c) noexcept {
    switch (c) {
    case kSentinel: return 0;
    case kSeparator: return 1;
    case kPad: return 2;
    default: return static_cast<std::int32_t>(static_cast<unsigned char>(c)) + 3;
    }
}

/// Maps a byte string to integer symbols under the reserved-character order.
std::vector<std::int32_t> rank_text(std::string_view text);

/// Lexicographic comparison under the reserved-character order.
bool rank_less(std::string_view a, std::string_view b) noexcept;

/// Uppercases ASCII letters in place.
void to_upper(std::string& s) noexcept;

}  // namespace pfg
