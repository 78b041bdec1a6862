// Rebuilds a prefix-free graph from any GFA with forward-only paths by
// spelling the paths and re-partitioning them.
//
//   gfa2pfg -t triggers.txt < pangenome.gfa > pfg.gfa

#include <CLI11.hpp>

#include "cli_common.hpp"
#include "pfg/gfa.hpp"
#include "pfg/partition.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Build a prefix-free graph (GFA) from the paths of a GFA graph"};
    std::string triggers_path;
    std::string input_path;
    bool quiet = false;
    app.add_option("-t,--triggers", triggers_path, "Trigger words, one per line")->required();
    app.add_option("input", input_path, "GFA file (default: standard input)");
    app.add_flag("-q,--quiet", quiet, "Suppress warnings");
    CLI11_PARSE(app, argc, argv);

    try {
        const auto triggers = pfg::cli::load_triggers(triggers_path);
        pfg::cli::Input input(input_path);
        const auto doc = pfg::read_gfa(input.stream());
        if (doc.paths.empty()) throw pfg::LoadError("GFA input has no P records");
        const auto graph = pfg::build_graph(pfg::expand_gfa_paths(doc), triggers);
        pfg::cli::report_warnings(graph, quiet);
        pfg::write_gfa(graph, std::cout, triggers.words());
        std::cout.flush();
        return std::cout ? 0 : 1;
    } catch (const pfg::Error& e) {
        std::cerr << "gfa2pfg: error: " << e.what() << '\n';
        return 1;
    }
}
