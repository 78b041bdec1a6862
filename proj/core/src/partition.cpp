#include "pfg/partition.hpp"

#include <unordered_map>

#include "pfg/alphabet.hpp"
#include "pfg/error.hpp"

namespace pfg {

std::vector<std::string> partition_sequence(std::string_view seq, const MatchAutomaton& automaton) {
    const std::size_t k = automaton.k();
    std::vector<std::string> segments;
    std::size_t boundary = 0;
    automaton.scan(seq, [&](const Match& m) {
        const std::size_t start = m.end + 1 - k;
        segments.emplace_back(seq.substr(boundary, m.end + 1 - boundary));
        boundary = start;
    });
    std::string last(seq.substr(boundary));
    last.append(k, kPad);
    segments.push_back(std::move(last));
    return segments;
}

PrefixFreeGraph build_graph(const Pangenome& pangenome, const TriggerSet& triggers) {
    pangenome.check();
    if (pangenome.sequences.empty()) throw StructuralError("pangenome has no sequences");

    const MatchAutomaton automaton(triggers);
    std::unordered_map<std::string, SegmentId> seen;
    std::vector<std::string> segments;
    std::vector<Path> paths;
    paths.reserve(pangenome.sequences.size());

    for (const auto& seq : pangenome.sequences) {
        Path path{seq.name, {}};
        for (auto& content : partition_sequence(seq.data, automaton)) {
            auto [it, inserted] = seen.try_emplace(content, static_cast<SegmentId>(segments.size()));
            if (inserted) segments.push_back(std::move(content));
            path.steps.push_back(it->second);
        }
        paths.push_back(std::move(path));
    }

    auto graph = normalize(triggers.k(), std::move(segments), std::move(paths));
    const auto report = validate(graph);
    if (!report.ok()) {
        for (const auto& d : report.diagnostics) {
            if (d.severity == Severity::error) throw StructuralError("invalid graph: " + d.message);
        }
    }
    return graph;
}

}  // namespace pfg
