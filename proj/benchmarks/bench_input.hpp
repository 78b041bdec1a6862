#pragma once

#include <random>
#include <string>

#include "pfg/graph.hpp"

namespace pfg::bench {

// `copies` point-mutated copies of one random seed, 1 substitution per 1000 bases.
inline Pangenome mutated_copies(int copies, std::size_t length, std::uint64_t seed = 7) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> base(0, 3);
    std::string root(length, 'A');
    for (auto& c : root) c = "ACGT"[base(rng)];
    std::uniform_int_distribution<std::size_t> where(0, length - 1);
    Pangenome p;
    for (int j = 0; j < copies; ++j) {
        std::string s = root;
        for (std::size_t m = 0; m < length / 1000; ++m) s[where(rng)] = "ACGT"[base(rng)];
        p.sequences.push_back({"s" + std::to_string(j), std::move(s)});
    }
    return p;
}

}  // namespace pfg::bench
