#include "pfg/fasta.hpp"

#include <algorithm>
#include <cctype>

#include "pfg/alphabet.hpp"
#include "pfg/error.hpp"

namespace pfg {

namespace {

void trim_right(std::string& line) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
}

void trim_left(std::string& line) {
    const auto first = std::find_if(line.begin(), line.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
    line.erase(line.begin(), first);
}

}  // namespace

Pangenome read_fasta(std::istream& in) {
    Pangenome pangenome;
    std::string line;
    std::size_t line_no = 0;
    std::size_t header_line = 0;

    auto finish_record = [&] {
        if (!pangenome.sequences.empty() && pangenome.sequences.back().data.empty()) {
            throw LoadError("empty sequence '" + pangenome.sequences.back().name + "'", header_line);
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        trim_right(line);
        if (!line.empty() && line.front() == '>') {
            finish_record();
            header_line = line_no;
            std::string name = line.substr(1);
            trim_left(name);
            name.erase(std::find_if(name.begin(), name.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                       name.end());
            if (name.empty()) name = "seq" + std::to_string(pangenome.sequences.size() + 1);
            pangenome.sequences.push_back({std::move(name), {}});
            continue;
        }
        if (line.empty()) continue;
        if (pangenome.sequences.empty()) throw LoadError("sequence data before the first '>' header", line_no);
        for (char c : line) {
            if (is_reserved(c)) {
                throw LoadError("reserved character '" + std::string(1, c) + "' in sequence '" +
                                    pangenome.sequences.back().name + "'",
                                line_no);
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                throw LoadError("whitespace inside sequence '" + pangenome.sequences.back().name + "'", line_no);
            }
        }
        to_upper(line);
        pangenome.sequences.back().data += line;
    }
    finish_record();
    if (pangenome.sequences.empty()) throw LoadError("no FASTA records in input");
    return pangenome;
}

std::vector<std::string> read_trigger_words(std::istream& in) {
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        trim_right(line);
        trim_left(line);
        if (line.empty() || line.front() == '#') continue;
        words.push_back(line);
    }
    return words;
}

TriggerSet read_triggers(std::istream& in) { return TriggerSet(read_trigger_words(in)); }

}  // namespace pfg
