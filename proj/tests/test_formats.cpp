#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "common/random_instances.hpp"
#include "common/running_example.hpp"
#include "pfg/error.hpp"
#include "pfg/fasta.hpp"
#include "pfg/gfa.hpp"
#include "pfg/partition.hpp"

namespace pfg {
namespace {

const char* const kRunningGfa =
    "H\tVN:Z:1.0\ttl:i:2\ttw:Z:AC,CG\n"
    "S\t0\tACAC\n"
    "S\t1\tACG\n"
    "S\t2\tACT..\n"
    "S\t3\tCAC\n"
    "S\t4\tCGAC\n"
    "S\t5\tCGTAC\n"
    "L\t0\t+\t2\t+\t2M\n"
    "L\t1\t+\t4\t+\t2M\n"
    "L\t1\t+\t5\t+\t2M\n"
    "L\t3\t+\t0\t+\t2M\n"
    "L\t3\t+\t1\t+\t2M\n"
    "L\t4\t+\t2\t+\t2M\n"
    "L\t5\t+\t2\t+\t2M\n"
    "P\ts1\t3+,1+,5+,2+\t2M,2M,2M\n"
    "P\ts2\t3+,0+,2+\t2M,2M\n"
    "P\ts3\t3+,1+,4+,2+\t2M,2M,2M\n";

Pangenome fasta(const std::string& text) {
    std::istringstream in(text);
    return read_fasta(in);
}

GfaDocument gfa(const std::string& text) {
    std::istringstream in(text);
    return read_gfa(in);
}

std::string gfa_text(const PrefixFreeGraph& g, const std::vector<std::string>& triggers = {}) {
    std::ostringstream out;
    write_gfa(g, out, triggers);
    return out.str();
}

TEST(ReadFasta, JoinsWrappedLines) {
    const auto p = fasta(">s1 description here\nCACG\nTACT\n");
    ASSERT_EQ(p.sequences.size(), 1u);
    EXPECT_EQ(p.sequences[0].name, "s1");
    EXPECT_EQ(p.sequences[0].data, "CACGTACT");
}

TEST(ReadFasta, UnnamedRecordsGetPositionalNames) {
    const auto p = fasta(">\nAC\n> \nGT\n");
    ASSERT_EQ(p.sequences.size(), 2u);
    EXPECT_EQ(p.sequences[0].name, "seq1");
    EXPECT_EQ(p.sequences[1].name, "seq2");
}

TEST(ReadFasta, RunningExampleLength) {
    EXPECT_EQ(fasta(testing::running_fasta()).total_length(), 21);
}

TEST(ReadFasta, UppercasesAndToleratesCrlf) {
    const auto p = fasta(">a\r\nacgt\r\nAc\r\n\r\n>b\r\nggg\r\n");
    ASSERT_EQ(p.sequences.size(), 2u);
    EXPECT_EQ(p.sequences[0].data, "ACGTAC");
    EXPECT_EQ(p.sequences[1].data, "GGG");
}

TEST(ReadFasta, Errors) {
    try {
        fasta(">x\n\n");
        FAIL();
    } catch (const LoadError& e) {
        EXPECT_EQ(e.line(), 1u);
    }
    try {
        fasta(">a\nACGT\n>b\nAC#T\n");
        FAIL();
    } catch (const LoadError& e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_NE(std::string(e.what()).find("reserved"), std::string::npos);
    }
    EXPECT_THROW(fasta(""), LoadError);
    EXPECT_THROW(fasta("ACGT\n>a\nAC\n"), LoadError);
    EXPECT_THROW(fasta(">a\nAC GT\n"), LoadError);
}

TEST(ReadTriggers, CommentsAndBlankLines) {
    std::istringstream in("# stop codons\nTAA\n\n  tag  \r\nTGA\n");
    const auto t = read_triggers(in);
    EXPECT_EQ(t.words(), (std::vector<std::string>{"TAA", "TAG", "TGA"}));
}

TEST(WriteGfa, RunningExampleExact) {
    const auto g = build_graph(testing::running_example(), testing::running_triggers());
    EXPECT_EQ(gfa_text(g, {"AC", "CG"}), kRunningGfa);
}

TEST(WriteGfa, SingleSegment) {
    const PrefixFreeGraph g{2, {"XY.."}, {{"p", {0}}}};
    EXPECT_EQ(gfa_text(g), "H\tVN:Z:1.0\ttl:i:2\nS\t0\tXY..\nP\tp\t0+\t*\n");
}

TEST(WriteGfa, Deterministic) {
    const auto g = build_graph(testing::running_example(), testing::running_triggers());
    EXPECT_EQ(gfa_text(g), gfa_text(g));
}

TEST(ReadGfa, RunningExample) {
    const auto doc = gfa(kRunningGfa);
    EXPECT_EQ(doc.version, "1.0");
    EXPECT_EQ(doc.k, 2u);
    EXPECT_EQ(doc.triggers, (std::vector<std::string>{"AC", "CG"}));
    EXPECT_EQ(doc.segments.size(), 6u);
    EXPECT_EQ(doc.links.size(), 7u);
    ASSERT_EQ(doc.paths.size(), 3u);
    EXPECT_EQ(doc.paths[1].steps, (std::vector<std::size_t>{3, 0, 2}));
    EXPECT_EQ(doc.paths[1].overlaps, (std::vector<std::int64_t>{2, 2}));
}

TEST(ReadGfa, RoundTripsGraph) {
    const auto g = build_graph(testing::running_example(), testing::running_triggers());
    EXPECT_EQ(graph_from_gfa(gfa(gfa_text(g))), g);
}

TEST(ReadGfa, PathsBeforeSegmentsAndUnknownRecords) {
    const auto doc = gfa("H\tVN:Z:1.0\nP\tp\tb+,a+\t*\nX\twhatever\nS\ta\tGG\nS\tb\tCC\n");
    ASSERT_EQ(doc.paths.size(), 1u);
    EXPECT_EQ(doc.paths[0].steps, (std::vector<std::size_t>{1, 0}));
    EXPECT_TRUE(doc.paths[0].overlaps.empty());
}

TEST(ReadGfa, Errors) {
    try {
        gfa("S\t1\tAC\nS\t5\tCA\nP\tp\t1+,5-\t*\n");
        FAIL();
    } catch (const LoadError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("reverse"), std::string::npos);
    }
    try {
        gfa("S\t1\tAC\nP\tp\t1+,9+\t*\n");
        FAIL();
    } catch (const LoadError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(gfa("S\t1\tAC\nP\tp\t1+,1+,1+\t1M\n"), LoadError);  // overlap count
    EXPECT_THROW(gfa("S\t1\tAC\nP\tp\t1+,1+\t1I\n"), LoadError);     // not <n>M
    EXPECT_THROW(gfa("S\t1\tAC\nS\t1\tCA\n"), LoadError);             // duplicate name
}

TEST(ExpandGfaPaths, RunningExample) {
    const auto p = expand_gfa_paths(gfa(kRunningGfa));
    const auto expected = testing::running_example();
    ASSERT_EQ(p.sequences.size(), 3u);
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(p.sequences[j].name, expected.sequences[j].name);
        EXPECT_EQ(p.sequences[j].data, expected.sequences[j].data);
    }
}

TEST(ExpandGfaPaths, ZeroOverlapConcatenates) {
    const auto p = expand_gfa_paths(gfa("S\ta\tACG\nS\tb\tTTA\nP\tp\ta+,b+\t*\nP\tq\tb+,a+\t0M\n"));
    EXPECT_EQ(p.sequences[0].data, "ACGTTA");
    EXPECT_EQ(p.sequences[1].data, "TTAACG");
}

TEST(ExpandGfaPaths, OverlapMismatchIsError) {
    EXPECT_THROW(expand_gfa_paths(gfa("S\ta\tACG\nS\tb\tTTA\nP\tp\ta+,b+\t1M\n")), LoadError);
    EXPECT_NO_THROW(expand_gfa_paths(gfa("S\ta\tACG\nS\tb\tGTA\nP\tp\ta+,b+\t1M\n")));
}

TEST(GraphFromGfa, RequiresTriggerLength) {
    EXPECT_THROW(graph_from_gfa(gfa("S\t0\tAC..\nP\tp\t0+\t*\n")), StructuralError);
    EXPECT_THROW(graph_from_gfa(gfa("H\ttl:i:2\nS\tx\tAC..\nP\tp\tx+\t*\n")), StructuralError);
    EXPECT_THROW(graph_from_gfa(gfa("H\ttl:i:2\nS\t0\tCAC\nS\t1\tACT..\nP\tp\t0+,1+\t1M\n")), StructuralError);
}

// FASTA -> graph -> GFA -> parse -> expand -> re-partition is a fixed point.
TEST(Gfa, RepartitionFixedPoint) {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 100; ++round) {
        const auto inst = testing::random_instance(rng, 5, 10, 400);
        const TriggerSet triggers(inst.triggers);
        const auto g = build_graph(inst.pangenome, triggers);
        const auto text = gfa_text(g, triggers.words());
        const auto again = build_graph(expand_gfa_paths(gfa(text)), triggers);
        EXPECT_EQ(again, g);
        EXPECT_EQ(gfa_text(again, triggers.words()), text);
    }
}

}  // namespace
}  // namespace pfg
