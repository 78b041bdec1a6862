#include "pfg/oracle.hpp"

#include <algorithm>
#include <string_view>

namespace pfg::oracle {

namespace {

// Local copy of the character order: '.' below every input byte, and a
// proper prefix below any extension.
int order(char c) {
    if (c == '.') return -1;
    return static_cast<unsigned char>(c);
}

bool suffix_less(std::string_view text, std::size_t a, std::size_t b) {
    const std::size_t n = text.size();
    while (a < n && b < n) {
        if (text[a] != text[b]) return order(text[a]) < order(text[b]);
        ++a;
        ++b;
    }
    return a == n && b != n;
}

}  // namespace

std::string padded_text(const Pangenome& pangenome, std::size_t k) {
    std::string text;
    for (const auto& s : pangenome.sequences) {
        text += s.data;
        text.append(k, '.');
    }
    return text;
}

std::vector<std::int64_t> oracle_sa(const Pangenome& pangenome, std::size_t k) {
    const std::string text = padded_text(pangenome, k);

    // Text offsets of real characters and their pangenome coordinates.
    std::vector<std::size_t> positions;
    std::vector<std::int64_t> coordinate(text.size(), -1);
    std::size_t offset = 0;
    std::int64_t pangenome_offset = 0;
    for (const auto& s : pangenome.sequences) {
        for (std::size_t i = 0; i < s.data.size(); ++i) {
            positions.push_back(offset + i);
            coordinate[offset + i] = pangenome_offset++;
        }
        offset += s.data.size() + k;
    }

    std::sort(positions.begin(), positions.end(),
              [&](std::size_t a, std::size_t b) { return suffix_less(text, a, b); });

    std::vector<std::int64_t> sa;
    sa.reserve(positions.size());
    for (auto p : positions) sa.push_back(coordinate[p]);
    return sa;
}

std::string oracle_bwt(const Pangenome& pangenome, const std::vector<std::int64_t>& sa) {
    std::string joined;
    std::vector<bool> is_start;
    for (const auto& s : pangenome.sequences) {
        is_start.resize(joined.size() + s.data.size(), false);
        is_start[joined.size()] = true;
        joined += s.data;
    }
    std::string bwt;
    bwt.reserve(sa.size());
    for (auto s : sa) {
        const auto u = static_cast<std::size_t>(s);
        bwt += is_start[u] ? '$' : joined[u - 1];
    }
    return bwt;
}

}  // namespace pfg::oracle
