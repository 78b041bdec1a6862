#include "pfg/suffix_array.hpp"

#include <algorithm>

#include "pfg/alphabet.hpp"

namespace pfg {

namespace {

using Index = std::int64_t;

// SA-IS after Nong, Zhang and Chan. No sentinel is required: the virtual
// empty suffix is handled by seeding the L-scan with position n - 1.
std::vector<Index> sais(std::span<const std::int32_t> s, std::int32_t upper) {
    const auto n = static_cast<Index>(s.size());
    if (n == 0) return {};
    if (n == 1) return {0};
    if (n == 2) return s[0] < s[1] ? std::vector<Index>{0, 1} : std::vector<Index>{1, 0};

    const auto sigma = static_cast<std::size_t>(upper) + 1;
    std::vector<Index> sa(static_cast<std::size_t>(n));
    std::vector<bool> is_s(static_cast<std::size_t>(n), false);
    for (Index i = n - 2; i >= 0; --i) {
        const auto u = static_cast<std::size_t>(i);
        is_s[u] = s[u] == s[u + 1] ? is_s[u + 1] : s[u] < s[u + 1];
    }

    // Bucket heads: l_head[c] is where L-suffixes starting with c begin,
    // s_head[c] is where S-suffixes starting with c begin.
    std::vector<Index> l_head(sigma + 1, 0), s_head(sigma + 1, 0);
    for (Index i = 0; i < n; ++i) {
        const auto c = static_cast<std::size_t>(s[static_cast<std::size_t>(i)]);
        if (!is_s[static_cast<std::size_t>(i)]) {
            ++s_head[c];
        } else {
            ++l_head[c + 1];
        }
    }
    for (std::size_t c = 0; c < sigma; ++c) {
        s_head[c] += l_head[c];
        l_head[c + 1] += s_head[c];
    }

    auto is_lms = [&](Index i) {
        return i > 0 && is_s[static_cast<std::size_t>(i)] && !is_s[static_cast<std::size_t>(i - 1)];
    };

    std::vector<Index> bucket(sigma + 1);
    auto induce = [&](const std::vector<Index>& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::copy(s_head.begin(), s_head.end(), bucket.begin());
        for (Index d : lms) sa[static_cast<std::size_t>(bucket[static_cast<std::size_t>(s[static_cast<std::size_t>(d)])]++)] = d;

        std::copy(l_head.begin(), l_head.end(), bucket.begin());
        sa[static_cast<std::size_t>(bucket[static_cast<std::size_t>(s[static_cast<std::size_t>(n - 1)])]++)] = n - 1;
        for (Index i = 0; i < n; ++i) {
            const Index v = sa[static_cast<std::size_t>(i)];
            if (v >= 1 && !is_s[static_cast<std::size_t>(v - 1)]) {
                sa[static_cast<std::size_t>(bucket[static_cast<std::size_t>(s[static_cast<std::size_t>(v - 1)])]++)] = v - 1;
            }
        }

        std::copy(l_head.begin(), l_head.end(), bucket.begin());
        for (Index i = n - 1; i >= 0; --i) {
            const Index v = sa[static_cast<std::size_t>(i)];
            if (v >= 1 && is_s[static_cast<std::size_t>(v - 1)]) {
                sa[static_cast<std::size_t>(--bucket[static_cast<std::size_t>(s[static_cast<std::size_t>(v - 1)]) + 1])] = v - 1;
            }
        }
    };

    std::vector<Index> lms_index(static_cast<std::size_t>(n), -1);
    std::vector<Index> lms;
    for (Index i = 1; i < n; ++i) {
        if (is_lms(i)) {
            lms_index[static_cast<std::size_t>(i)] = static_cast<Index>(lms.size());
            lms.push_back(i);
        }
    }
    induce(lms);
    if (lms.empty()) return sa;

    // Name LMS substrings in sorted order, then sort the reduced string.
    const auto m = lms.size();
    std::vector<Index> sorted_lms;
    sorted_lms.reserve(m);
    for (Index v : sa) {
        if (v >= 0 && lms_index[static_cast<std::size_t>(v)] >= 0) sorted_lms.push_back(v);
    }
    std::vector<std::int32_t> reduced(m);
    std::int32_t name = 0;
    reduced[static_cast<std::size_t>(lms_index[static_cast<std::size_t>(sorted_lms[0])])] = 0;
    auto lms_end = [&](Index p) {
        const auto next = static_cast<std::size_t>(lms_index[static_cast<std::size_t>(p)]) + 1;
        return next < m ? lms[next] : n;
    };
    for (std::size_t i = 1; i < m; ++i) {
        Index l = sorted_lms[i - 1], r = sorted_lms[i];
        const Index end_l = lms_end(l), end_r = lms_end(r);
        bool same = end_l - l == end_r - r;
        if (same) {
            while (l < end_l && s[static_cast<std::size_t>(l)] == s[static_cast<std::size_t>(r)]) {
                ++l;
                ++r;
            }
            if (l == n || s[static_cast<std::size_t>(l)] != s[static_cast<std::size_t>(r)]) same = false;
        }
        if (!same) ++name;
        reduced[static_cast<std::size_t>(lms_index[static_cast<std::size_t>(sorted_lms[i])])] = name;
    }

    const auto reduced_sa = sais(reduced, name);
    for (std::size_t i = 0; i < m; ++i) sorted_lms[i] = lms[static_cast<std::size_t>(reduced_sa[i])];
    induce(sorted_lms);
    return sa;
}

}  // namespace

std::vector<std::int64_t> suffix_array(std::span<const std::int32_t> symbols, std::int32_t upper) {
    return sais(symbols, upper);
}

std::vector<std::int64_t> suffix_array(std::string_view text) {
    const auto ranks = rank_text(text);
    return sais(ranks, kRankAlphabetSize - 1);
}

std::vector<std::int64_t> lcp_array(std::span<const std::int32_t> symbols, std::span<const std::int64_t> sa) {
    const std::size_t n = sa.size();
    std::vector<std::int64_t> lcp(n, 0);
    if (n == 0) return lcp;
    const auto rank = inverse(sa);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = static_cast<std::size_t>(rank[i]);
        if (r == 0) {
            h = 0;
            continue;
        }
        const auto j = static_cast<std::size_t>(sa[r - 1]);
        while (i + h < n && j + h < n && symbols[i + h] == symbols[j + h]) ++h;
        lcp[r] = static_cast<std::int64_t>(h);
        if (h > 0) --h;
    }
    lcp[0] = -1;
    return lcp;
}

std::vector<std::int64_t> inverse(std::span<const std::int64_t> sa) {
    std::vector<std::int64_t> isa(sa.size());
    for (std::size_t i = 0; i < sa.size(); ++i) isa[static_cast<std::size_t>(sa[i])] = static_cast<std::int64_t>(i);
    return isa;
}

}  // namespace pfg
