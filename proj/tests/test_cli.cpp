#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "choosy/cli.hpp"

using namespace choosy;

namespace {

std::string data_path(const std::string& name) {
    const char* dir = std::getenv("CHOOSY_DATA");
    return std::string(dir ? dir : "data") + "/" + name;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json report_without_runtime(const std::string& text) {
    json j = json::parse(text);
    j["counters"].erase("runtime_us");
    return j;
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("choosy-cli-" + std::to_string(std::hash<std::string>{}(
                                     ::testing::UnitTest::GetInstance()->current_test_info()->name())));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(Cli, CheckTwoNegativeWithWitness) {
    const auto r = run({"check2", data_path("c5.graph"), "--witness"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("not 2-choosable"), std::string::npos);
    EXPECT_NE(r.out.find("{1 2 3 4 5}"), std::string::npos) << r.out;
}

TEST(Cli, CheckTwoPositiveWithOracle) {
    const auto r = run({"check2", data_path("k23.graph"), "--oracle", "--json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["verdicts"]["2_choosable"], true);
    EXPECT_EQ(j["verdicts"]["oracle_agrees"], true);
    EXPECT_GT(j["counters"]["search_nodes"].get<int>(), 0);
}

TEST(Cli, StatsAndCore) {
    const auto stats = run({"stats", data_path("petersen.graph"), "--json"});
    ASSERT_EQ(stats.code, 0) << stats.err;
    const json j = json::parse(stats.out);
    EXPECT_EQ(j["verdicts"]["girth"], 5);
    EXPECT_EQ(j["verdicts"]["diameter"], 2);
    EXPECT_EQ(j["verdicts"]["bipartite"], false);
    const auto core = run({"core", data_path("tree.graph")});
    EXPECT_EQ(core.code, 0);
    EXPECT_NE(core.out.find("K1"), std::string::npos) << core.out;
}

TEST(Cli, DeletionCommands) {
    const auto c6 = run({"del2", data_path("c6.graph"), "--json"});
    EXPECT_EQ(c6.code, 0);
    EXPECT_EQ(json::parse(c6.out)["witnesses"]["deletion_set"], json::array());
    const auto k24 = run({"del2", data_path("k24.graph"), "--exact", "--json"});
    EXPECT_EQ(k24.code, 0);
    EXPECT_EQ(json::parse(k24.out)["verdicts"]["size"], 1);
    const auto near = run({"near3", data_path("k24.graph"), "--min", "--json"});
    EXPECT_EQ(near.code, 0);
    EXPECT_EQ(json::parse(near.out)["witnesses"]["independent_set"], json::array({1}));
}

TEST(Cli, VerifyGadgets) {
    const auto r = run({"verify", "gadgets"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
    EXPECT_EQ(run({"verify", "gadgets", "--p", "2"}).code, 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"check2"}).code, 2);
    EXPECT_EQ(run({"check2", data_path("missing.graph")}).code, 2);
    EXPECT_EQ(run({"reduce", "planar3sat", data_path("sat1.cnf")}).code, 2);
    EXPECT_EQ(run({"check2", data_path("c6.graph"), "--oracle", "--budget", "5"}).code, 3);
    EXPECT_EQ(run({"del2", data_path("petersen.graph"), "--exact", "--budget", "3"}).code, 3);
}

TEST(Cli, ParseErrorsAreUsageErrors) {
    TempDir dir;
    write_file(dir.file("bad.graph"), "p edge 2 1\ne 1 1\n");
    const auto r = run({"check2", dir.file("bad.graph")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(Cli, ReduceThenSolve) {
    TempDir dir;
    const std::string prefix = dir.file("g");
    const auto reduce = run({"reduce", "planar3sat", data_path("sat1.cnf"), "--p", "1", "--out", prefix});
    ASSERT_EQ(reduce.code, 0) << reduce.err;
    EXPECT_TRUE(std::filesystem::exists(prefix + ".graph"));
    EXPECT_TRUE(std::filesystem::exists(prefix + ".roles.json"));
    const auto solved = run({"solution-from-assignment", prefix, "--tau", "111", "--json"});
    ASSERT_EQ(solved.code, 0) << solved.err;
    const json j = json::parse(solved.out);
    EXPECT_EQ(j["verdicts"]["valid"], true);
    EXPECT_LE(j["verdicts"]["size"].get<int>(), 42);
    // x3 false with x1, x2 false leaves the only clause unsatisfied.
    EXPECT_EQ(run({"solution-from-assignment", prefix + ".roles.json", "--tau", "001"}).code, 2);
    EXPECT_EQ(run({"solution-from-assignment", prefix, "--tau", "11"}).code, 2);

    const std::string h = dir.file("h");
    ASSERT_EQ(run({"reduce", "sat3", data_path("sat1.cnf"), "--out", h}).code, 0);
    const auto hs = run({"solution-from-assignment", h, "--tau", "100", "--json"});
    ASSERT_EQ(hs.code, 0) << hs.err;
    EXPECT_EQ(json::parse(hs.out)["verdicts"]["valid"], true);
}

TEST(Cli, TamperedGraphIsRejected) {
    TempDir dir;
    const std::string prefix = dir.file("g");
    ASSERT_EQ(run({"reduce", "planar3sat", data_path("sat1.cnf"), "--p", "1", "--out", prefix}).code, 0);
    write_file(prefix + ".graph", "p edge 2 1\ne 1 2\n");
    EXPECT_EQ(run({"solution-from-assignment", prefix, "--tau", "111"}).code, 2);
}

TEST(Cli, VertexCoverReduction) {
    const auto r = run({"reduce", "vc", data_path("c5.graph"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("triangle-reduction"), std::string::npos);
}

TEST(Cli, GeneratorsAreSeededAndDeterministic) {
    const auto a = run({"gen", "gnp", "--n", "12", "--prob", "0.3", "--seed", "7"});
    const auto b = run({"gen", "gnp", "--n", "12", "--prob", "0.3", "--seed", "7"});
    const auto c = run({"gen", "gnp", "--n", "12", "--prob", "0.3", "--seed", "8"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    const auto f1 = run({"gen", "formula", "--vars", "6", "--clauses", "4", "--seed", "3"});
    const auto f2 = run({"gen", "formula", "--vars", "6", "--clauses", "4", "--seed", "3"});
    EXPECT_EQ(f1.out, f2.out);
    EXPECT_NO_THROW(parse_dimacs_cnf(f1.out));
    EXPECT_EQ(parse_graph(run({"gen", "cycle", "--n", "6"}).out).size(), 6);
    EXPECT_EQ(parse_graph(run({"gen", "theta", "2", "2", "4"}).out).order(), 7);
}

TEST(Cli, JsonReportsAreByteIdenticalAcrossRuns) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"check2", data_path("c5.graph"), "--json"},
          std::vector<std::string>{"near3", data_path("k24.graph"), "--min", "--json"},
          std::vector<std::string>{"reduce", "planar3sat", data_path("rotated2.cnf"), "--p", "1", "--json"},
          std::vector<std::string>{"gen", "gnp", "--n", "9", "--prob", "0.4", "--seed", "1", "--json"}}) {
        const auto a = run(args), b = run(args);
        EXPECT_EQ(report_without_runtime(a.out).dump(2), report_without_runtime(b.out).dump(2));
        const json j = json::parse(a.out);
        EXPECT_EQ(j["version"], kVersion);
        EXPECT_EQ(j["input_digest"].get<std::string>().size(), 64u);
    }
}

TEST(Cli, BinaryRunsEndToEnd) {
#ifndef CHOOSY_BINARY
    GTEST_SKIP() << "built without the CLI binary path";
#else
    const char* binary = CHOOSY_BINARY;
    const std::string command = std::string(binary) + " check2 " + data_path("c5.graph") + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    ASSERT_NE(status, -1);
    EXPECT_EQ(WEXITSTATUS(status), 1);
#endif
}
