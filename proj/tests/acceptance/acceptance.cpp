// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: wturan_acceptance [path-to-wturan-cli]
// Without the CLI path the determinism criterion is reported as FAIL.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "support/oracles.hpp"
#include "wturan/wturan.hpp"

using namespace wturan;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

template <class F>
void for_all_graphs(std::size_t max_n, F&& f) {
    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n ? n - 1 : 0) / 2)); ++mask)
            f(from_pair_mask(n, mask));
}

Outcome ac1_sweep() {
    Outcome o;
    auto s = sweep_all_graphs(7);
    if (s.graphs_checked != 2'097'152) o.fail("checked " + std::to_string(s.graphs_checked) + " graphs");
    if (s.violations != 0) o.fail(std::to_string(s.violations) + " violations");
    if (s.min_slack.sign() < 0) o.fail("min_slack " + s.min_slack.str());
    if (o.ok)
        o.detail = "2097152 graphs, 0 violations, min_slack " + s.min_slack.str() + ", max W " +
                   s.max_total_weight.str();
    return o;
}

Outcome ac2_tightness() {
    Outcome o;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 16; ++n) {
        for (std::size_t r = 1; r <= n; ++r) {
            if (n % r) continue;
            // r = 1 is the edgeless graph, tight only for n = 0.
            if (r == 1) continue;
            ++cases;
            auto slack = verify_theorem(turan_graph(n, r));
            if (!slack.is_zero()) o.fail("T(" + std::to_string(n) + "," + std::to_string(r) + ") slack " + slack.str());
        }
        if (n >= 2) {
            ++cases;
            auto slack = verify_theorem(complete_graph(n));
            if (!slack.is_zero()) o.fail("K_" + std::to_string(n) + " slack " + slack.str());
        }
    }
    if (o.ok) o.detail = std::to_string(cases) + " graphs with slack exactly 0";
    return o;
}

Outcome ac3_chain() {
    Outcome o;
    std::uint64_t count = 0;
    for_all_graphs(6, [&](const Graph& g) {
        if (g.order() == 0) return;
        auto m = exact_lagrangian(g, WeightScheme::paper()).m;
        auto lower = uniform_value(weight_report(g));
        ++count;
        if (lower > m || m > Rational(1, 4)) o.fail(write_graph6(g) + ": W/n^2 " + lower.str() + ", m " + m.str());
    });
    for (std::size_t n = 2; n <= 10; ++n) {
        auto m = exact_lagrangian(complete_graph(n), WeightScheme::paper()).m;
        if (m != Rational(1, 4)) o.fail("m(K_" + std::to_string(n) + ") = " + m.str());
    }
    if (o.ok) o.detail = std::to_string(count) + " graphs satisfy W/n^2 <= m <= 1/4; m(K_n) = 1/4 for n = 2..10";
    return o;
}

Outcome ac4_motzkin_straus() {
    Outcome o;
    std::uint64_t count = 0;
    const auto unit = WeightScheme::constant(Rational(1));
    for_all_graphs(6, [&](const Graph& g) {
        ++count;
        auto m = exact_lagrangian(g, unit).m;
        auto want = motzkin_straus_value(g);
        if (m != want) o.fail(write_graph6(g) + ": m " + m.str() + " vs " + want.str());
    });
    if (o.ok) o.detail = std::to_string(count) + " graphs equal (1 - 1/omega)/2";
    return o;
}

Outcome ac5_grid() {
    Outcome o;
    std::uint64_t count = 0;
    Rational worst_gap;
    for_all_graphs(5, [&](const Graph& g) {
        if (g.order() == 0) return;
        ++count;
        auto m = exact_lagrangian(g, WeightScheme::paper()).m;
        auto grid = grid_oracle(g, WeightScheme::paper(), 40);
        if (grid > m) o.fail(write_graph6(g) + ": grid " + grid.str() + " above m " + m.str());
        if (m - grid > Rational(1, 20)) o.fail(write_graph6(g) + ": gap " + (m - grid).str());
        if (m - grid > worst_gap) worst_gap = m - grid;
    });
    if (o.ok) o.detail = std::to_string(count) + " graphs, largest gap m - grid " + worst_gap.str();
    return o;
}

Outcome ac6_reduction() {
    Outcome o;
    std::size_t max_steps = 0, total_steps = 0;
    for (std::uint64_t i = 0; i < 1000 && o.ok; ++i) {
        Graph g = random_gnp(30, Rational(1, 2), derive_seed(6, i));
        Xoshiro256StarStar rng(derive_seed(606, i));
        std::vector<std::uint64_t> k(30);
        std::uint64_t sum = 0;
        while (sum == 0) {
            sum = 0;
            for (auto& v : k) sum += (v = rng() % 5 == 0 ? 0 : 1 + rng() % 997);
        }
        std::vector<Rational> xs;
        for (auto v : k) xs.emplace_back(v, sum);
        SimplexPoint x(std::move(xs));

        WeightedGraph wg(g, WeightScheme::paper());
        auto res = support_reduce(wg, x);
        SimplexPoint cur = x;
        const std::string tag = "draw " + std::to_string(i) + ": ";
        for (const auto& s : res.trace.steps) {
            const auto i_ = s.receiver, j = s.donor;
            if (g.adjacent(i_, j)) o.fail(tag + "adjacent pair moved");
            if (cur[i_].sign() <= 0 || cur[j].sign() <= 0) o.fail(tag + "pair not in support");
            if (s.s_receiver != wg.side_sum(cur, i_) || s.s_donor != wg.side_sum(cur, j)) o.fail(tag + "side sums");
            if (s.f_before != wg.f(cur) || s.f_after != wg.f(s.point_after)) o.fail(tag + "f values");
            auto gain = cur[j] * (s.s_receiver - s.s_donor);
            if (s.f_after - s.f_before != gain) o.fail(tag + "step identity");
            if (gain.sign() < 0) o.fail(tag + "negative gain");
            if (s.point_after.support().size() + 1 != cur.support().size()) o.fail(tag + "support did not shrink by 1");
            cur = s.point_after;
        }
        if (!(cur == res.point)) o.fail(tag + "final point mismatch");
        if (res.trace.steps.size() > 29) o.fail(tag + std::to_string(res.trace.steps.size()) + " steps");
        if (!is_clique(g, res.point.support())) o.fail(tag + "final support is not a clique");
        max_steps = std::max(max_steps, res.trace.steps.size());
        total_steps += res.trace.steps.size();
    }
    if (o.ok)
        o.detail = "1000 traces, " + std::to_string(total_steps) + " steps, longest " + std::to_string(max_steps);
    return o;
}

Outcome ac7_corollary() {
    Outcome o;
    auto s = corollary_campaign(12, 3, 100, 1);
    if (s.graphs_checked != 100 || s.violations != 0) o.fail("campaign failed");
    auto t = turan_graph(12, 3);
    auto bound = turan_edge_bound(12, 3);
    if (Rational(t.size()) != bound || bound != Rational(48)) o.fail("e(T(12,3)) = " + std::to_string(t.size()));
    if (!turan_corollary_check(t, 3)) o.fail("T(12,3) check");
    if (o.ok)
        o.detail = "100 subgraphs of T(12,3), max e " + s.max_total_weight.str() + "; e(T(12,3)) = 48 = bound";
    return o;
}

Outcome ac8_clique_engine() {
    Outcome o;
    std::uint64_t count = 0;
    for_all_graphs(6, [&](const Graph& g) {
        ++count;
        if (max_clique_size(g) != oracle::clique_number(g)) o.fail(write_graph6(g) + ": clique number");
        for (auto [u, v] : g.edges())
            if (edge_clique_number(g, u, v) != oracle::edge_clique_number(g, u, v))
                o.fail(write_graph6(g) + ": edge clique number");
        auto got = enumerate_cliques(g);
        std::vector<std::vector<Vertex>> lists;
        for (const auto& c : got) lists.push_back(c.vertices);
        if (lists != oracle::all_cliques(g)) o.fail(write_graph6(g) + ": clique enumeration");
    });
    if (o.ok) o.detail = std::to_string(count) + " graphs agree with the all-subsets oracle";
    return o;
}

// ------------------------------------------------------------ determinism

struct Captured {
    int status;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

Captured run_cli(const std::string& exe, const std::vector<std::string>& args, const std::filesystem::path& dir,
                 const std::string& input) {
    auto in = dir / "stdin.txt", out = dir / "stdout.txt", err = dir / "stderr.txt";
    std::ofstream(in, std::ios::binary) << input;
    std::string cmd = quote(exe);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " < " + quote(in.string()) + " > " + quote(out.string()) + " 2> " + quote(err.string());
    int status = std::system(cmd.c_str());
    return {status, slurp(out), slurp(err)};
}

Outcome ac9_determinism(const std::string& exe) {
    Outcome o;
    if (exe.empty()) {
        o.fail("no CLI path given");
        return o;
    }
    auto dir = std::filesystem::temp_directory_path() / ("wturan_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);

    const std::string corpus = [] {
        std::string s;
        for (const auto& g : {complete_graph(5), cycle_graph(5), turan_graph(9, 3), empty_graph(4),
                              from_edge_list(3, {{0, 1}, {1, 2}})})
            s += write_graph6(g) + "\n";
        for (std::uint64_t i = 0; i < 6; ++i) s += write_graph6(random_gnp(11, Rational(3, 5), derive_seed(9, i))) + "\n";
        return s;
    }();
    const std::string edge_list = "5 6\n0 1\n1 2\n2 0\n2 3\n3 4\n4 0\n";

    struct Case {
        std::vector<std::string> args;
        std::string input;
    };
    std::vector<Case> cases = {
        {{"gen", "turan", "12", "5"}, ""},
        {{"gen", "complete", "7"}, ""},
        {{"gen", "empty", "3"}, ""},
        {{"gen", "cycle", "8"}, ""},
        {{"gen", "gnp", "30", "1/2", "--seed", "42", "--count", "5"}, ""},
        {{"weights"}, corpus},
        {{"verify"}, corpus},
        {{"verify"}, edge_list},
        {{"lagrangian"}, corpus},
        {{"lagrangian", "--mode", "constant:1"}, corpus},
        {{"lagrangian", "--mode", "constant:7/3"}, edge_list},
        {{"reduce"}, corpus},
        {{"reduce", "--start", "1/5,1/5,1/5,1/5,1/5"}, edge_list},
        {{"oracle", "--grid", "12"}, "Dhc\nCF\n"},
        {{"sweep", "--n", "5"}, ""},
        {{"fuzz", "--n", "12", "--p", "1/2", "--count", "20", "--seed", "3"}, ""},
        {{"corollary", "--n", "12", "--r", "3", "--count", "100", "--seed", "1"}, ""},
        {{"verify"}, "Bw\nB!\n"},  // error path, exit 1
    };

    std::size_t runs = 0;
    for (const auto& c : cases) {
        for (const char* fmt : {"human", "json", "tsv"}) {
            std::vector<std::string> base = {"--format", fmt};
            auto with = [&](const char* threads) {
                auto a = base;
                a.insert(a.end(), {"--threads", threads});
                a.insert(a.end(), c.args.begin(), c.args.end());
                return a;
            };
            auto first = run_cli(exe, with("1"), dir, c.input);
            auto second = run_cli(exe, with("1"), dir, c.input);
            auto many = run_cli(exe, with("4"), dir, c.input);
            runs += 3;
            std::string label = std::string(fmt);
            for (const auto& a : c.args) label += " " + a;
            if (first.out.empty() && first.status == 0) o.fail(label + ": no output");
            for (const auto* r : {&second, &many})
                if (r->status != first.status || r->out != first.out || r->err != first.err)
                    o.fail(label + ": output differs");
        }
    }
    std::filesystem::remove_all(dir);
    if (o.ok) o.detail = std::to_string(cases.size() * 3) + " command lines, " + std::to_string(runs) +
                         " runs, byte-identical across repeats and 1 vs 4 threads";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    const std::string exe = argc > 1 ? argv[1] : "";
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 exhaustive sweep n=7", ac1_sweep},
        {"AC2 Turan and complete graphs tight", ac2_tightness},
        {"AC3 Lagrangian chain n<=6", ac3_chain},
        {"AC4 Motzkin-Straus equivalence n<=6", ac4_motzkin_straus},
        {"AC5 grid oracle consistency n<=5", ac5_grid},
        {"AC6 support reduction traces", ac6_reduction},
        {"AC7 Turan corollary", ac7_corollary},
        {"AC8 clique engine vs brute force n<=6", ac8_clique_engine},
        {"AC9 CLI determinism", [&] { return ac9_determinism(exe); }},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %s: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
