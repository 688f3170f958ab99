#include <gtest/gtest.h>

#include <sstream>

#include "wturan_cli.hpp"

using namespace wturan;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& s) {
    std::vector<Json> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
    return out;
}

} // namespace

TEST(Cli, GenWritesGraph6)
{
    auto r = run({"gen", "complete", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "Bw\n");
    EXPECT_EQ(run({"gen", "turan", "6", "3"}).out, write_graph6(turan_graph(6, 3)) + "\n");
    EXPECT_EQ(run({"gen", "cycle", "5"}).out, "Dhc\n");
    EXPECT_EQ(run({"gen", "empty", "2"}).out, "A?\n");
}

TEST(Cli, GenGnpUsesDerivedSeeds)
{
    auto r = run({"gen", "gnp", "10", "1/2", "--seed", "9", "--count", "3"});
    ASSERT_EQ(r.code, 0);
    std::string want;
    for (std::uint64_t i = 0; i < 3; ++i) want += write_graph6(random_gnp(10, Rational(1, 2), derive_seed(9, i))) + "\n";
    EXPECT_EQ(r.out, want);
}

TEST(Cli, GenUsageErrors)
{
    EXPECT_EQ(run({"gen", "complete"}).code, 1);
    EXPECT_EQ(run({"gen", "petersen", "10"}).code, 1);
    EXPECT_EQ(run({"gen", "gnp", "5", "2"}).code, 1);
    EXPECT_EQ(run({"gen", "cycle", "2"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(Cli, VerifyPipeline)
{
    auto gen = run({"gen", "turan", "12", "4"});
    auto r = run({"--format", "json", "verify"}, gen.out + "Bw\nDhc\n");
    ASSERT_EQ(r.code, 0) << r.err;
    auto js = lines(r.out);
    ASSERT_EQ(js.size(), 3u);
    EXPECT_EQ(js[0]["slack"], "0");
    EXPECT_EQ(js[0]["tight"], true);
    EXPECT_EQ(js[0]["edge_count"], 54);
    EXPECT_EQ(js[1]["total"], "9/4");
    EXPECT_EQ(js[2]["slack"], "5/4");
    EXPECT_EQ(js[2]["line"], 3);
    EXPECT_EQ(js[2]["graph"], 3);
}

TEST(Cli, WeightsOnEdgeList)
{
    auto r = run({"--format", "json", "weights"}, "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
    ASSERT_EQ(r.code, 0) << r.err;
    auto js = lines(r.out);
    ASSERT_EQ(js.size(), 1u);
    EXPECT_EQ(js[0]["total"], "15/4");
    EXPECT_EQ(js[0]["slack"], "1/4");
    ASSERT_EQ(js[0]["edges"].size(), 5u);
    EXPECT_EQ(js[0]["edges"][0]["r"], 3);
    EXPECT_EQ(js[0]["edges"][0]["w"], "3/4");
}

TEST(Cli, LagrangianConstantModeOnFiveCycle)
{
    auto r = run({"--format", "json", "lagrangian", "--mode", "constant:1"}, "Dhc\n");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = lines(r.out).at(0);
    EXPECT_EQ(j["m"], "1/4");
    EXPECT_EQ(j["edge_count"], 5);
    EXPECT_EQ(j["mode"], "constant:1");
    EXPECT_TRUE(j["chain"].is_null());
    EXPECT_EQ(j["support"], Json::array({0, 1}));
}

TEST(Cli, LagrangianPaperModeReportsChain)
{
    auto r = run({"--format", "json", "lagrangian"}, "Dhc\n");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = lines(r.out).at(0);
    EXPECT_EQ(j["chain"]["lower"], "1/5");
    EXPECT_EQ(j["chain"]["holds"], true);
    EXPECT_EQ(j["m"], "1/4");
}

TEST(Cli, ReduceOnPath)
{
    auto r = run({"--format", "json", "reduce"}, "3 2\n0 1\n1 2\n");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = lines(r.out).at(0);
    EXPECT_EQ(j["final"], Json::array({"2/3", "1/3", "0"}));
    ASSERT_EQ(j["steps"].size(), 1u);
    EXPECT_EQ(j["steps"][0]["i"], 0);
    EXPECT_EQ(j["steps"][0]["j"], 2);
    EXPECT_EQ(j["f_final"], "2/9");

    auto tsv = run({"--format", "tsv", "reduce", "--start", "1/2,0,1/2"}, "3 2\n0 1\n1 2\n");
    ASSERT_EQ(tsv.code, 0) << tsv.err;
    EXPECT_EQ(tsv.out, "graph\tstep\ti\tj\ts_i\ts_j\tf_before\tf_after\tpoint_after\n"
                       "1\t1\t0\t2\t0\t0\t0\t0\t1,0,0\n");
}

TEST(Cli, OracleGrid)
{
    auto g = write_graph6(from_edge_list(3, {{0, 1}, {1, 2}}));
    auto r = run({"--format", "json", "oracle", "--grid", "4"}, g + "\n");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = lines(r.out).at(0);
    EXPECT_EQ(j["value"], "1/4");
    EXPECT_EQ(j["point"], Json::array({"1/2", "1/2", "0"}));
    EXPECT_EQ(run({"oracle", "--grid", "40", "--cap", "10"}, "Bw\n").code, 1);
}

TEST(Cli, Campaigns)
{
    auto s = run({"--format", "json", "sweep", "--n", "3"});
    ASSERT_EQ(s.code, 0) << s.err;
    auto j = lines(s.out).at(0);
    EXPECT_EQ(j["graphs_checked"], 8);
    EXPECT_EQ(j["max_total_weight"], "9/4");
    EXPECT_EQ(j["campaign"], "sweep");
    EXPECT_EQ(run({"sweep", "--n", "9"}).code, 1);

    auto f = run({"--format", "json", "fuzz", "--n", "10", "--p", "0", "--count", "5"});
    ASSERT_EQ(f.code, 0) << f.err;
    EXPECT_EQ(lines(f.out).at(0)["min_slack"], "25");

    auto c = run({"--format", "json", "corollary", "--n", "12", "--r", "3", "--count", "100", "--seed", "1"});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(lines(c.out).at(0)["violations"], 0);
    EXPECT_EQ(lines(c.out).at(0)["bound"], "48");
}

TEST(Cli, ParseErrorsCarryLine)
{
    auto r = run({"--format", "json", "verify"}, "Bw\nB!\n");
    EXPECT_EQ(r.code, 1);
    auto e = Json::parse(r.err)["error"];
    EXPECT_EQ(e["kind"], "parse");
    EXPECT_EQ(e["line"], 2);
    EXPECT_EQ(e["exit_code"], 1);

    auto h = run({"verify"}, "3 1\n0 7\n");
    EXPECT_EQ(h.code, 1);
    EXPECT_EQ(h.err.rfind("error: ", 0), 0u);
}

TEST(Cli, MissingFile)
{
    EXPECT_EQ(run({"verify", "/nonexistent/graphs.g6"}).code, 1);
}

TEST(Cli, OutputIndependentOfThreads)
{
    const std::string input = run({"gen", "gnp", "11", "3/4", "--seed", "4", "--count", "4"}).out;
    for (auto cmd : {"lagrangian", "verify", "weights"}) {
        auto a = run({"--format", "json", "--threads", "1", cmd}, input);
        auto b = run({"--format", "json", "--threads", "4", cmd}, input);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out) << cmd;
    }
    auto a = run({"--threads", "1", "sweep", "--n", "5"});
    auto b = run({"--threads", "6", "sweep", "--n", "5"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, HumanAndTsvFormats)
{
    auto h = run({"verify"}, "Bw\n");
    EXPECT_EQ(h.out, "graph 1 (Bw): W = 9/4 <= n^2/4 = 9/4, slack 0 (tight)\n");
    auto t = run({"--format", "tsv", "verify"}, "Bw\n");
    EXPECT_EQ(t.out, "graph\tgraph6\tn\tm\ttotal\tbound\tslack\ttight\n1\tBw\t3\t3\t9/4\t9/4\t0\tyes\n");
}
