#include "pfg/gfa.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_map>
#include <utility>

#include "pfg/alphabet.hpp"
#include "pfg/error.hpp"

namespace pfg {

namespace {

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
        const auto end = s.find(delim, begin);
        fields.push_back(s.substr(begin, end - begin));
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return fields;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

// "<n>M" -> n. Other CIGAR operations are not meaningful for path expansion.
std::optional<std::int64_t> parse_overlap(std::string_view cigar) {
    if (cigar.size() < 2 || cigar.back() != 'M') return std::nullopt;
    auto n = parse_int(cigar.substr(0, cigar.size() - 1));
    if (!n || *n < 0) return std::nullopt;
    return n;
}

struct PendingPath {
    std::string name;
    std::vector<std::string> steps;
    std::vector<std::int64_t> overlaps;
    std::size_t line;
};

}  // namespace

void write_gfa(const PrefixFreeGraph& graph, std::ostream& out, const std::vector<std::string>& triggers) {
    out << "H\tVN:Z:1.0\ttl:i:" << graph.k;
    if (!triggers.empty()) {
        out << "\ttw:Z:";
        for (std::size_t i = 0; i < triggers.size(); ++i) out << (i ? "," : "") << triggers[i];
    }
    out << '\n';

    for (std::size_t id = 0; id < graph.segments.size(); ++id) {
        out << "S\t" << id << '\t' << graph.segments[id] << '\n';
    }

    std::set<std::pair<SegmentId, SegmentId>> links;
    for (const auto& path : graph.paths) {
        for (std::size_t t = 1; t < path.steps.size(); ++t) links.emplace(path.steps[t - 1], path.steps[t]);
    }
    for (const auto& [from, to] : links) {
        out << "L\t" << from << "\t+\t" << to << "\t+\t" << graph.k << "M\n";
    }

    for (const auto& path : graph.paths) {
        out << "P\t" << path.name << '\t';
        for (std::size_t t = 0; t < path.steps.size(); ++t) out << (t ? "," : "") << path.steps[t] << '+';
        out << '\t';
        if (path.steps.size() < 2) {
            out << '*';
        } else {
            for (std::size_t t = 1; t < path.steps.size(); ++t) out << (t > 1 ? "," : "") << graph.k << 'M';
        }
        out << '\n';
    }
}

GfaDocument read_gfa(std::istream& in) {
    GfaDocument doc;
    std::unordered_map<std::string, std::size_t> segment_index;
    std::vector<PendingPath> pending;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split(line, '\t');
        const std::string& type = fields[0];

        if (type == "H") {
            for (std::size_t f = 1; f < fields.size(); ++f) {
                const auto& tag = fields[f];
                if (tag.rfind("VN:Z:", 0) == 0) {
                    doc.version = tag.substr(5);
                } else if (tag.rfind("tl:i:", 0) == 0) {
                    auto k = parse_int(std::string_view(tag).substr(5));
                    if (!k || *k < 1) throw LoadError("invalid trigger-length tag '" + tag + "'", line_no);
                    doc.k = static_cast<std::size_t>(*k);
                } else if (tag.rfind("tw:Z:", 0) == 0) {
                    doc.triggers = split(tag.substr(5), ',');
                }
            }
        } else if (type == "S") {
            if (fields.size() < 3 || fields[1].empty()) throw LoadError("S record needs a name and a sequence", line_no);
            if (fields[2] == "*") throw LoadError("S record '" + fields[1] + "' has no sequence", line_no);
            if (!segment_index.emplace(fields[1], doc.segments.size()).second) {
                throw LoadError("duplicate segment name '" + fields[1] + "'", line_no);
            }
            doc.segments.push_back({fields[1], fields[2]});
        } else if (type == "L") {
            if (fields.size() < 6) throw LoadError("L record needs 6 fields", line_no);
            doc.links.push_back({fields[1], fields[3], parse_overlap(fields[5])});
        } else if (type == "P") {
            if (fields.size() < 3) throw LoadError("P record needs a name and a segment list", line_no);
            PendingPath path{fields[1], {}, {}, line_no};
            for (const auto& step : split(fields[2], ',')) {
                if (step.size() < 2) throw LoadError("malformed path step '" + step + "'", line_no);
                if (step.back() == '-') {
                    throw LoadError("reverse orientation in step '" + step + "' is not supported", line_no);
                }
                if (step.back() != '+') throw LoadError("path step '" + step + "' lacks an orientation", line_no);
                path.steps.push_back(step.substr(0, step.size() - 1));
            }
            if (fields.size() > 3 && fields[3] != "*") {
                for (const auto& cigar : split(fields[3], ',')) {
                    auto overlap = parse_overlap(cigar);
                    if (!overlap) throw LoadError("unsupported overlap '" + cigar + "'", line_no);
                    path.overlaps.push_back(*overlap);
                }
                if (path.overlaps.size() + 1 != path.steps.size()) {
                    throw LoadError("path '" + path.name + "' has " + std::to_string(path.overlaps.size()) +
                                        " overlaps for " + std::to_string(path.steps.size()) + " steps",
                                    line_no);
                }
            }
            pending.push_back(std::move(path));
        }
    }

    for (auto& p : pending) {
        GfaPath path{std::move(p.name), {}, std::move(p.overlaps)};
        for (const auto& step : p.steps) {
            const auto it = segment_index.find(step);
            if (it == segment_index.end()) throw LoadError("path references unknown segment '" + step + "'", p.line);
            path.steps.push_back(it->second);
        }
        doc.paths.push_back(std::move(path));
    }
    return doc;
}

Pangenome expand_gfa_paths(const GfaDocument& doc) {
    Pangenome pangenome;
    for (const auto& path : doc.paths) {
        std::string data = doc.segments[path.steps.front()].sequence;
        for (std::size_t t = 1; t < path.steps.size(); ++t) {
            const std::string& next = doc.segments[path.steps[t]].sequence;
            const auto overlap = static_cast<std::size_t>(path.overlaps.empty() ? 0 : path.overlaps[t - 1]);
            if (overlap > next.size() || overlap > data.size() ||
                data.compare(data.size() - overlap, overlap, next, 0, overlap) != 0) {
                throw LoadError("path '" + path.name + "': declared overlap " + std::to_string(overlap) +
                                " does not match segments '" + doc.segments[path.steps[t - 1]].name + "' and '" +
                                doc.segments[path.steps[t]].name + "'");
            }
            data.append(next, overlap);
        }
        if (doc.k) {
            const std::size_t k = *doc.k;
            if (data.size() <= k || data.find_first_not_of(kPad, data.size() - k) != std::string::npos) {
                throw LoadError("path '" + path.name + "' does not end with " + std::to_string(k) + " pads");
            }
            data.resize(data.size() - k);
        }
        to_upper(data);
        pangenome.sequences.push_back({path.name, std::move(data)});
    }
    pangenome.check();
    return pangenome;
}

PrefixFreeGraph graph_from_gfa(const GfaDocument& doc) {
    if (!doc.k) throw StructuralError("GFA header lacks the trigger-length tag tl:i");
    if (doc.segments.empty()) throw StructuralError("GFA has no segments");
    PrefixFreeGraph graph;
    graph.k = *doc.k;
    graph.segments.resize(doc.segments.size());
    std::vector<SegmentId> id_of(doc.segments.size());
    std::vector<bool> seen(doc.segments.size(), false);
    for (std::size_t i = 0; i < doc.segments.size(); ++i) {
        const auto id = parse_int(doc.segments[i].name);
        if (!id || *id < 0 || static_cast<std::size_t>(*id) >= doc.segments.size() ||
            seen[static_cast<std::size_t>(*id)]) {
            throw StructuralError("segment name '" + doc.segments[i].name + "' is not an id in 0.." +
                                  std::to_string(doc.segments.size() - 1));
        }
        seen[static_cast<std::size_t>(*id)] = true;
        id_of[i] = *id;
        graph.segments[static_cast<std::size_t>(*id)] = doc.segments[i].sequence;
    }
    for (const auto& path : doc.paths) {
        for (auto overlap : path.overlaps) {
            if (overlap != static_cast<std::int64_t>(graph.k)) {
                throw StructuralError("path '" + path.name + "' has overlap " + std::to_string(overlap) +
                                      ", expected " + std::to_string(graph.k));
            }
        }
        Path p{path.name, {}};
        p.steps.reserve(path.steps.size());
        for (auto s : path.steps) p.steps.push_back(id_of[s]);
        graph.paths.push_back(std::move(p));
    }
    const auto report = validate(graph);
    for (const auto& d : report.diagnostics) {
        if (d.severity == Severity::error) throw StructuralError("invalid prefix-free graph: " + d.message);
    }
    return graph;
}

}  // namespace pfg
