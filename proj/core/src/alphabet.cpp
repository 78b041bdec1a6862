#include "pfg/alphabet.hpp"

#include <algorithm>

namespace pfg {

std::vector<std::int32_t> rank_text(std::string_view text) {
    std::vector<std::int32_t> ranks(text.size());
    std::transform(text.begin(), text.end(), ranks.begin(), char_rank);
    return ranks;
}

bool rank_less(std::string_view a, std::string_view b) noexcept {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](char x, char y) { return char_rank(x) < char_rank(y); });
}

void to_upper(std::string& s) noexcept {
    for (char& c : s) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
}

}  // namespace pfg
