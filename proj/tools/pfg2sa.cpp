// Streams the pangenome suffix array of a prefix-free graph.
//
//   pfg2sa [--bwt] [--verify] < pfg.gfa
//
// One line per entry: index, SA value, segment id, position in segment and,
// with --bwt, the preceding character ('$' at sequence starts).

#include <CLI11.hpp>

#include "cli_common.hpp"
#include "pfg/gfa.hpp"
#include "pfg/oracle.hpp"
#include "pfg/sa_stream.hpp"

namespace {

pfg::Pangenome spell(const pfg::PrefixFreeGraph& graph) {
    pfg::Pangenome p;
    for (std::size_t j = 0; j < graph.paths.size(); ++j) {
        p.sequences.push_back({graph.paths[j].name, pfg::reconstruct(graph, j)});
    }
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stream the suffix array of a prefix-free graph"};
    std::string input_path;
    bool bwt = false;
    bool verify = false;
    bool quiet = false;
    app.add_option("input", input_path, "Prefix-free graph GFA (default: standard input)");
    app.add_flag("--bwt", bwt, "Append the BWT character to each line");
    app.add_flag("--verify", verify, "Check the stream against a brute-force suffix sort (small inputs)");
    app.add_flag("-q,--quiet", quiet, "Suppress warnings");
    CLI11_PARSE(app, argc, argv);
    std::ios::sync_with_stdio(false);

    try {
        pfg::cli::Input input(input_path);
        const auto graph = pfg::graph_from_gfa(pfg::read_gfa(input.stream()));
        pfg::cli::report_warnings(graph, quiet);

        const auto n = pfg::pangenome_offsets(graph).total;
        if (verify && n > pfg::oracle::kMaxOracleLength) {
            throw pfg::ConfigError("--verify supports pangenomes up to " +
                                   std::to_string(pfg::oracle::kMaxOracleLength) + " bases, got " +
                                   std::to_string(n));
        }

        const auto table = pfg::build_suffix_table(graph);
        const auto segments = pfg::assemble(graph);
        pfg::SaStream stream(graph, table, segments, bwt || verify);

        std::vector<std::int64_t> expected_sa;
        std::string expected_bwt;
        if (verify) {
            const auto pangenome = spell(graph);
            expected_sa = pfg::oracle::oracle_sa(pangenome, graph.k);
            expected_bwt = pfg::oracle::oracle_bwt(pangenome, expected_sa);
        }

        std::int64_t mismatches = 0;
        std::string line;
        for (const auto& e : stream) {
            line.clear();
            line += std::to_string(e.index);
            line += '\t';
            line += std::to_string(e.sa);
            line += '\t';
            line += std::to_string(e.id);
            line += '\t';
            line += std::to_string(e.pos);
            if (bwt) {
                line += '\t';
                line += *e.bwt;
            }
            line += '\n';
            std::cout << line;
            if (verify) {
                const auto i = static_cast<std::size_t>(e.index);
                if (i >= expected_sa.size() || expected_sa[i] != e.sa || expected_bwt[i] != *e.bwt) ++mismatches;
            }
        }
        std::cout.flush();

        if (verify) {
            if (stream.emitted() != static_cast<std::int64_t>(expected_sa.size())) ++mismatches;
            if (mismatches) {
                std::cerr << "pfg2sa: error: " << mismatches << " entries disagree with the brute-force suffix array\n";
                return 1;
            }
            if (!quiet) std::cerr << "pfg2sa: verified " << stream.emitted() << " entries\n";
        }
        return std::cout ? 0 : 1;
    } catch (const pfg::Error& e) {
        std::cerr << "pfg2sa: error: " << e.what() << '\n';
        return 1;
    }
}
