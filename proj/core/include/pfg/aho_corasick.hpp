#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pfg {

/// A non-empty set of distinct, uppercase words sharing one length k.
class TriggerSet {
public:
    /// Uppercases and deduplicates `words`. Throws ConfigError on an empty
    /// set, mixed lengths, or a reserved character.
    explicit TriggerSet(std::vector<std::string> words);

    std::size_t k() const noexcept { return k_; }
    const std::vector<std::string>& words() const noexcept { return words_; }

private:
    std::vector<std::string> words_;
    std::size_t k_ = 0;
};

struct Match {
    std::size_t end;   ///< inclusive end position in the scanned text
    std::size_t word;  ///< index into TriggerSet::words()

    friend bool operator==(const Match&, const Match&) = default;
};

/// Aho-Corasick automaton over a TriggerSet, compiled to a dense DFA.
///
/// Bytes that do not occur in any trigger share one character class, so the
/// transition table has (states x distinct trigger bytes + 1) entries.
class MatchAutomaton {
public:
    explicit MatchAutomaton(const TriggerSet& triggers);

    std::size_t state_count() const noexcept { return depth_.size(); }
    std::size_t k() const noexcept { return k_; }

    /// Every occurrence of every trigger, ordered by end position.
    std::vector<Match> find_matches(std::string_view text) const;

    /// Streaming form of find_matches; `on_match(const Match&)` is called in
    /// left-to-right order.
    template <class F>
    void scan(std::string_view text, F&& on_match) const {
        std::int32_t state = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            state = next(state, text[i]);
            for (std::int32_t out = output_[static_cast<std::size_t>(state)]; out >= 0;
                 out = output_link_[static_cast<std::size_t>(out)]) {
                on_match(Match{i, static_cast<std::size_t>(word_at_[static_cast<std::size_t>(out)])});
            }
        }
    }

private:
    std::int32_t next(std::int32_t state, char c) const noexcept {
        return delta_[static_cast<std::size_t>(state) * classes_ + class_of_[static_cast<unsigned char>(c)]];
    }

    std::size_t k_ = 0;
    std::size_t classes_ = 1;
    std::array<std::uint16_t, 256> class_of_{};
    std::vector<std::int32_t> delta_;
    std::vector<std::int32_t> depth_;
    // Output chain: output_[s] is the nearest state on s's failure chain
    // (including s) that ends a word; output_link_ continues the chain.
    std::vector<std::int32_t> word_at_;
    std::vector<std::int32_t> output_;
    std::vector<std::int32_t> output_link_;
};

inline MatchAutomaton compile(const TriggerSet& triggers) { return MatchAutomaton(triggers); }

}  // namespace pfg
