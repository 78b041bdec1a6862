#include "pfg/aho_corasick.hpp"

#include <algorithm>
#include <queue>

#include "pfg/alphabet.hpp"
#include "pfg/error.hpp"

namespace pfg {

TriggerSet::TriggerSet(std::vector<std::string> words) : words_(std::move(words)) {
    if (words_.empty()) throw ConfigError("trigger set is empty");
    for (auto& w : words_) {
        to_upper(w);
        if (w.empty()) throw ConfigError("trigger words must be non-empty");
        if (std::any_of(w.begin(), w.end(), is_reserved)) {
            throw ConfigError("trigger word '" + w + "' contains a reserved character");
        }
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    k_ = words_.front().size();
    for (const auto& w : words_) {
        if (w.size() != k_) {
            throw ConfigError("trigger words have mixed lengths (" + std::to_string(k_) + " and " +
                              std::to_string(w.size()) + ")");
        }
    }
}

MatchAutomaton::MatchAutomaton(const TriggerSet& triggers) : k_(triggers.k()) {
    // Character classes: 0 for bytes absent from every trigger.
    for (const auto& w : triggers.words()) {
        for (char c : w) {
            auto& cls = class_of_[static_cast<unsigned char>(c)];
            if (cls == 0) cls = static_cast<std::uint16_t>(classes_++);
        }
    }

    // Trie.
    std::vector<std::int32_t> trie(classes_, -1);
    depth_.push_back(0);
    word_at_.push_back(-1);
    for (std::size_t w = 0; w < triggers.words().size(); ++w) {
        std::int32_t state = 0;
        for (char c : triggers.words()[w]) {
            const std::size_t slot = static_cast<std::size_t>(state) * classes_ + class_of_[static_cast<unsigned char>(c)];
            if (trie[slot] < 0) {
                trie[slot] = static_cast<std::int32_t>(depth_.size());
                depth_.push_back(depth_[static_cast<std::size_t>(state)] + 1);
                word_at_.push_back(-1);
                trie.resize(trie.size() + classes_, -1);
            }
            state = trie[slot];
        }
        word_at_[static_cast<std::size_t>(state)] = static_cast<std::int32_t>(w);
    }

    // Failure links by BFS, folded into a complete transition function.
    const std::size_t states = depth_.size();
    delta_.assign(states * classes_, 0);
    output_.assign(states, -1);
    output_link_.assign(states, -1);
    std::vector<std::int32_t> fail(states, 0);
    std::queue<std::int32_t> queue;
    for (std::size_t c = 0; c < classes_; ++c) {
        const std::int32_t child = trie[c];
        if (child >= 0) {
            delta_[c] = child;
            queue.push(child);
        }
    }
    if (word_at_[0] >= 0) output_[0] = 0;
    while (!queue.empty()) {
        const std::int32_t s = queue.front();
        queue.pop();
        const auto su = static_cast<std::size_t>(s);
        const auto f = static_cast<std::size_t>(fail[su]);
        output_[su] = word_at_[su] >= 0 ? s : output_[f];
        output_link_[su] = word_at_[su] >= 0 ? output_[f] : output_link_[f];
        for (std::size_t c = 0; c < classes_; ++c) {
            const std::int32_t child = trie[su * classes_ + c];
            if (child >= 0) {
                fail[static_cast<std::size_t>(child)] = delta_[f * classes_ + c];
                delta_[su * classes_ + c] = child;
                queue.push(child);
            } else {
                delta_[su * classes_ + c] = delta_[f * classes_ + c];
            }
        }
    }
}

std::vector<Match> MatchAutomaton::find_matches(std::string_view text) const {
    std::vector<Match> matches;
    scan(text, [&](const Match& m) { matches.push_back(m); });
    return matches;
}

}  // namespace pfg
