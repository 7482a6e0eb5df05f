#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chroma_cli/cli.hpp"
#include "test_support.hpp"

using namespace chroma::testing;
using Json = nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out.substr(0, out.find('\n'))); }
    std::vector<Json> lines() const {
        std::vector<Json> v;
        std::istringstream in(out);
        for (std::string l; std::getline(in, l);) v.push_back(Json::parse(l));
        return v;
    }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = chroma::cli::run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST(Cli, Count) {
    const auto r = run({"count", "--builtin", "moser", "-k", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["count"], "384");
    EXPECT_EQ(run({"count", "--graph6", "C~", "-k", "4"}).json()["count"], "24");
}

TEST(Cli, EdgeListInput) {
    const std::string path = ::testing::TempDir() + "/c5.edges";
    std::ofstream(path) << "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    const auto r = run({"count", "--edges", path, "-k", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["count"], "30");
    EXPECT_EQ(run({"count", "--edges", path + ".missing", "-k", "3"}).code, 2);
}

TEST(Cli, ChiPolyCritical) {
    EXPECT_EQ(run({"chi", "--builtin", "mycielski3"}).json()["chi"], 4);
    const auto p = run({"poly", "--builtin", "complete:3"}).json();
    EXPECT_EQ(p["polynomial"], "x^3 - 3*x^2 + 2*x");
    EXPECT_EQ(p["coefficients"], Json::array({"0", "2", "-3", "1"}));
    const auto c = run({"critical", "--builtin", "moser"}).json();
    EXPECT_EQ(c["is_critical"], true);
    EXPECT_EQ(c["gallai_ok"], true);
}

TEST(Cli, Estimate) {
    const auto e = run({"estimate", "--builtin", "complete:4", "-k", "4", "--samples", "10", "--seed", "1"}).json();
    EXPECT_EQ(e["mean"], 24.0);
    EXPECT_EQ(e["stderr"], 0.0);
    EXPECT_EQ(e["samples"], 10);
    EXPECT_EQ(e["seed"], 1);
}

TEST(Cli, SeedFromEnvironment) {
    const std::vector<std::string> args{"estimate", "--builtin", "moser", "-k", "4", "--samples", "2000"};
    ::setenv("CHROMA_SEED", "42", 1);
    const auto env = run(args);
    const auto bad = (::setenv("CHROMA_SEED", "x1", 1), run(args));
    ::unsetenv("CHROMA_SEED");
    EXPECT_EQ(env.json()["seed"], 42);
    EXPECT_EQ(bad.code, 2);
    auto flagged = args;
    flagged.insert(flagged.end(), {"--seed", "42"});
    EXPECT_EQ(run(flagged).out, env.out);
    EXPECT_EQ(run(args).json()["seed"], 0);
}

TEST(Cli, Bound) {
    const auto r = run({"bound", "--builtin", "moser"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["exact"], "384");
    for (const auto& s : j["stages"])
        if (s["certified"] == true) {
            EXPECT_GE(s["value"].get<double>(), 384 * (1 - 1e-9));
            EXPECT_LE(s["value"].get<double>(), 648.0);
        }
}

TEST(Cli, VerifyTomescu) {
    const auto census = run({"verify-tomescu", "--corpus", data_path("connected_n7.g6"), "-k", "4", "--criticality"});
    ASSERT_EQ(census.code, 0) << census.err;
    int critical = 0;
    for (const auto& j : census.lines()) {
        EXPECT_EQ(j["satisfied"], true);
        if (j["critical"] == true) ++critical;
    }
    EXPECT_EQ(critical, 2);

    const auto c5 = run({"verify-tomescu", "--corpus", "-", "-k", "3"}, "Dhc\n");
    EXPECT_EQ(c5.code, 0);
    EXPECT_EQ(c5.json()["satisfied"], false);
    EXPECT_EQ(c5.json()["exact"], "30");

    const auto trees = run({"verify-tomescu", "--corpus", "-", "--x-min", "4", "--x-max", "7"}, "E~C_\n");
    ASSERT_EQ(trees.code, 0) << trees.err;
    EXPECT_EQ(trees.json()["equality"], true);
    EXPECT_EQ(trees.json()["core_is_clique"], true);
    EXPECT_EQ(trees.json()["general_x"].size(), 4u);
}

TEST(Cli, CorpusDiagnostics) {
    const auto r = run({"verify-tomescu", "--corpus", "-"}, "C~\nD??\nC!\n");
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.lines().size(), 1u);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    EXPECT_NE(r.err.find("disconnected"), std::string::npos);
    EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

TEST(Cli, OutputIndependentOfJobs) {
    const std::vector<std::string> base{"bound-chain", "--corpus", data_path("connected_n6.g6"), "--seed", "3"};
    auto parallel = base;
    parallel.insert(parallel.end(), {"--jobs", "3"});
    const auto a = run(base), b = run(parallel);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.lines().size(), 112u);
}

TEST(Cli, LemmaSweep) {
    const auto r = run({"lemma-sweep", "--kmax", "100"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = r.lines();
    ASSERT_EQ(lines.size(), 4u);
    for (const auto& j : lines) EXPECT_EQ(j["passed"], true) << j.dump();
    EXPECT_EQ(lines[2]["strict_from"], 8);
    EXPECT_EQ(run({"lemma-sweep", "--kmax", "5"}).code, 0);
    EXPECT_EQ(run({"lemma-sweep", "--kmax", "4"}).code, 2);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"count", "--builtin", "moser"}).code, 2);
    EXPECT_EQ(run({"count", "--graph6", "!!", "-k", "4"}).code, 2);
    EXPECT_EQ(run({"count", "--builtin", "bogus", "-k", "4"}).code, 2);
    EXPECT_EQ(run({"count", "--builtin", "moser", "--graph6", "C~", "-k", "4"}).code, 2);
    EXPECT_EQ(run({"estimate", "--builtin", "moser", "-k", "4", "--mode", "sideways"}).code, 2);
    EXPECT_EQ(run({"bound", "--builtin", "moser", "-k", "5"}).code, 2);
    EXPECT_EQ(run({"verify-tomescu", "--corpus", "/nonexistent"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
