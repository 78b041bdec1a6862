#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "pfg/aho_corasick.hpp"
#include "pfg/error.hpp"
#include "pfg/fasta.hpp"
#include "pfg/graph.hpp"

namespace pfg::cli {

/// Standard input when `path` is empty or "-", otherwise the named file.
class Input {
public:
    explicit Input(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
        if (!*file_) throw LoadError("cannot open '" + path + "'");
    }

    std::istream& stream() { return file_ ? *file_ : std::cin; }

private:
    std::unique_ptr<std::ifstream> file_;
};

inline TriggerSet load_triggers(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open trigger file '" + path + "'");
    return read_triggers(in);
}

inline void report_warnings(const PrefixFreeGraph& graph, bool quiet) {
    if (quiet) return;
    for (const auto& d : validate(graph).diagnostics) {
        if (d.severity == Severity::warning) std::cerr << "warning: " << d.message << '\n';
    }
}

}  // namespace pfg::cli
