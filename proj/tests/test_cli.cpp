#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "common/running_example.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
    int status;
    std::string out;
};

// Runs `command` through the shell, capturing stdout.
Result run(const std::string& command) {
    Result r{-1, {}};
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("pfg_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
        write("triggers.txt", "# running example\nAC\nCG\n");
        write("input.fa", pfg::testing::running_fasta());
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
    std::string err() const {
        std::ifstream in(path("err.txt"));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::string quiet() const { return " 2>" + path("err.txt"); }

    fs::path dir_;
};

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
    std::size_t count = 0;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) count += line.rfind(prefix, 0) == 0;
    return count;
}

TEST_F(CliTest, Fasta2PfgRunningExample) {
    const auto r = run(std::string(FASTA2PFG) + " -t " + path("triggers.txt") + " < " + path("input.fa") + quiet());
    ASSERT_EQ(r.status, 0) << err();
    EXPECT_EQ(count_prefix(r.out, "S\t"), 6u);
    EXPECT_EQ(count_prefix(r.out, "P\t"), 3u);
    EXPECT_NE(r.out.find("P\ts2\t3+,0+,2+\t2M,2M\n"), std::string::npos);
}

TEST_F(CliTest, Fasta2PfgAcceptsFileArgument) {
    const auto a = run(std::string(FASTA2PFG) + " -t " + path("triggers.txt") + " " + path("input.fa") + quiet());
    const auto b = run(std::string(FASTA2PFG) + " -t " + path("triggers.txt") + " < " + path("input.fa") + quiet());
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, Fasta2PfgMissingTriggersIsUsageError) {
    const auto r = run(std::string(FASTA2PFG) + " < " + path("input.fa") + quiet());
    EXPECT_NE(r.status, 0);
    EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, Fasta2PfgReservedCharacterNamesLine) {
    write("bad.fa", ">a\nACGT\n>b\nAC#T\n");
    const auto r = run(std::string(FASTA2PFG) + " -t " + path("triggers.txt") + " < " + path("bad.fa") + quiet());
    EXPECT_NE(r.status, 0);
    EXPECT_NE(err().find("line 4"), std::string::npos) << err();
}

TEST_F(CliTest, Gfa2PfgFixedPoint) {
    const auto first = run(std::string(FASTA2PFG) + " -t " + path("triggers.txt") + " < " + path("input.fa") + quiet());
    write("pfg.gfa", first.out);
    const auto second = run(std::string(GFA2PFG) + " -t " + path("triggers.txt") + " < " + path("pfg.gfa") + quiet());
    ASSERT_EQ(second.status, 0) << err();
    EXPECT_EQ(second.out, first.out);
}

TEST_F(CliTest, Gfa2PfgStarOverlaps) {
    write("plain.gfa", "H\tVN:Z:1.0\nS\tx\tCACG\nS\ty\tTACT\nP\ts1\tx+,y+\t*\n");
    const auto r = run(std::string(GFA2PFG) + " -t " + path("triggers.txt") + " < " + path("plain.gfa") + quiet());
    ASSERT_EQ(r.status, 0) << err();
    EXPECT_NE(r.out.find("P\ts1\t2+,0+,3+,1+\t2M,2M,2M\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, Gfa2PfgReverseOrientationFails) {
    write("rev.gfa", "S\tx\tCACG\nS\ty\tTACT\nP\ts1\tx+,y-\t*\n");
    const auto r = run(std::string(GFA2PFG) + " -t " + path("triggers.txt") + " < " + path("rev.gfa") + quiet());
    EXPECT_NE(r.status, 0);
    EXPECT_NE(err().find("reverse"), std::string::npos);
}

TEST_F(CliTest, Pfg2SaRunningExample) {
    const auto gfa = run(std::string(FASTA2PFG) + " -t " + path("triggers.txt") + " < " + path("input.fa") + quiet());
    write("pfg.gfa", gfa.out);
    const auto r = run(std::string(PFG2SA) + " < " + path("pfg.gfa") + quiet());
    ASSERT_EQ(r.status, 0) << err();
    EXPECT_EQ(r.out.substr(0, r.out.find('\n') + 1), "0\t9\t0\t0\n");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 21);

    const auto with_bwt = run(std::string(PFG2SA) + " --bwt " + path("pfg.gfa") + quiet());
    ASSERT_EQ(with_bwt.status, 0);
    std::string bwt;
    std::istringstream in(with_bwt.out);
    for (std::string line; std::getline(in, line);) bwt += line.back();
    EXPECT_EQ(bwt, pfg::testing::kRunningBwt);
}

TEST_F(CliTest, Pfg2SaVerify) {
    const auto gfa = run(std::string(FASTA2PFG) + " -t " + path("triggers.txt") + " < " + path("input.fa") + quiet());
    write("pfg.gfa", gfa.out);
    const auto r = run(std::string(PFG2SA) + " --verify < " + path("pfg.gfa") + quiet());
    EXPECT_EQ(r.status, 0) << err();
}

TEST_F(CliTest, Pfg2SaRejectsGraphWithoutTriggerLength) {
    write("nok.gfa", "S\t0\tAC..\nP\tp\t0+\t*\n");
    const auto r = run(std::string(PFG2SA) + " < " + path("nok.gfa") + quiet());
    EXPECT_NE(r.status, 0);
}

TEST_F(CliTest, ToolsAreDeterministic) {
    const std::string cmd = std::string(FASTA2PFG) + " -t " + path("triggers.txt") + " < " + path("input.fa") + quiet();
    EXPECT_EQ(run(cmd).out, run(cmd).out);
}

}  // namespace
