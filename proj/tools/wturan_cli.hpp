#pragma once

// Command-line front end. `run_cli` is the whole program minus process
// setup, so tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 usage or parse error, 2 invariant violation.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "wturan/wturan.hpp"

namespace wturan::cli {

enum class Format { json, tsv, human };

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

namespace detail {

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "tsv") return Format::tsv;
    if (s == "human") return Format::human;
    throw InvalidArgument("unknown output format '" + s + "'");
}

inline std::size_t parse_count(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        auto v = std::stoull(s, &pos);
        if (pos != s.size() || s.front() == '-') throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InvalidArgument(std::string("invalid ") + what + " '" + s + "'");
    }
}

inline std::string join(const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
    return out;
}

struct Options {
    std::string format = "human";
    std::string input_format = "auto";
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
};

class App {
public:
    explicit App(Streams io) : io_(io) {}

    int run(std::vector<std::string> args) {
        CLI::App app{"Exact verification of the clique-weighted Turan bound and its graph Lagrangian"};
        app.require_subcommand(1);
        app.fallthrough();
        app.set_version_flag("--version", "wturan 1.0.0");
        app.add_option("--format", opt_.format, "Output format: human, json or tsv")
            ->check(CLI::IsMember({"human", "json", "tsv"}));
        app.add_option("--input-format", opt_.input_format, "Input format: auto, graph6 or edgelist")
            ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
        app.add_option("--threads", opt_.threads, "Worker threads (output does not depend on this)")
            ->check(CLI::PositiveNumber);

        std::function<void()> action;
        add_gen(app, action);
        add_graph_commands(app, action);
        add_campaigns(app, action);

        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp& e) {
            io_.out << app.help();
            return 0;
        } catch (const CLI::CallForVersion&) {
            io_.out << "wturan 1.0.0\n";
            return 0;
        } catch (const CLI::ParseError& e) {
            return fail(1, "usage", e.what());
        }

        try {
            fmt_ = parse_format(opt_.format);
            action();
            return 0;
        } catch (const TheoremViolation& e) {
            Json extra = {{"report", to_json(e.report())}};
            return fail(2, "violation", e.what(), extra);
        } catch (const InvariantViolation& e) {
            return fail(2, "violation", e.what());
        } catch (const ParseError& e) {
            Json extra = Json::object();
            if (e.line()) extra["line"] = e.line();
            return fail(1, "parse", e.what(), extra);
        } catch (const InvalidArgument& e) {
            return fail(1, "usage", e.what());
        }
    }

private:
    // ---------------------------------------------------------------- plumbing

    int fail(int code, const std::string& kind, const std::string& message, const Json& extra = Json::object()) {
        if (opt_.format == "json") {
            Json body = extra;
            body["kind"] = kind;
            body["message"] = message;
            body["exit_code"] = code;
            io_.err << Json{{"error", body}}.dump() << "\n";
        } else {
            io_.err << "error: " << message << "\n";
        }
        return code;
    }

    std::vector<InputGraph> load(const std::string& path) {
        auto format = parse_input_format(opt_.input_format);
        if (path == "-") return read_graphs(io_.in, format);
        std::ifstream f(path);
        if (!f) throw InvalidArgument("cannot open '" + path + "'");
        return read_graphs(f, format);
    }

    void emit(const Json& j) { io_.out << j.dump() << "\n"; }

    HarnessOptions harness_options() const {
        HarnessOptions h;
        h.threads = opt_.threads;
        return h;
    }

    // ---------------------------------------------------------------- gen

    void add_gen(CLI::App& app, std::function<void()>& action) {
        auto* cmd = app.add_subcommand("gen", "Write generated graphs as graph6 lines");
        cmd->add_option("kind", gen_kind_, "turan N R | complete N | empty N | cycle N | gnp N P")
            ->required()
            ->check(CLI::IsMember({"turan", "complete", "empty", "cycle", "gnp"}));
        cmd->add_option("params", gen_params_, "Generator parameters");
        cmd->add_option("--seed", seed_, "Seed for gnp");
        cmd->add_option("--count", count_, "Number of gnp draws; draw i uses derive_seed(seed, i)");
        cmd->callback([this, &action] { action = [this] { run_gen(); }; });
    }

    void run_gen() {
        auto want = [&](std::size_t k) {
            if (gen_params_.size() != k)
                throw InvalidArgument("gen " + gen_kind_ + " takes " + std::to_string(k) + " parameter(s)");
        };
        auto num = [&](std::size_t i) { return parse_count(gen_params_[i], "parameter"); };
        if (gen_kind_ == "turan") {
            want(2);
            io_.out << write_graph6(turan_graph(num(0), num(1))) << "\n";
        } else if (gen_kind_ == "complete") {
            want(1);
            io_.out << write_graph6(complete_graph(num(0))) << "\n";
        } else if (gen_kind_ == "empty") {
            want(1);
            io_.out << write_graph6(empty_graph(num(0))) << "\n";
        } else if (gen_kind_ == "cycle") {
            want(1);
            io_.out << write_graph6(cycle_graph(num(0))) << "\n";
        } else {
            want(2);
            auto p = Rational::parse(gen_params_[1]);
            std::size_t n = num(0);
            if (count_ < 1) throw InvalidArgument("--count must be >= 1");
            for (std::uint64_t i = 0; i < count_; ++i) io_.out << write_graph6(random_gnp(n, p, derive_seed(seed_, i))) << "\n";
        }
    }

    // ---------------------------------------------------------------- per-graph commands

    void add_graph_commands(CLI::App& app, std::function<void()>& action) {
        auto input_opt = [this](CLI::App* cmd) {
            cmd->add_option("input", input_, "graph6 or edge-list file ('-' for stdin)");
        };

        auto* weights = app.add_subcommand("weights", "Per-edge clique numbers and weights");
        input_opt(weights);
        weights->callback([this, &action] { action = [this] { run_weights(); }; });

        auto* verify = app.add_subcommand("verify", "Check the weighted edge bound");
        input_opt(verify);
        verify->callback([this, &action] { action = [this] { run_verify(); }; });

        auto* lag = app.add_subcommand("lagrangian", "Exact maximum of the weighted Lagrangian");
        input_opt(lag);
        lag->add_option("--mode", mode_, "paper | constant | constant:<c>");
        lag->callback([this, &action] { action = [this] { run_lagrangian(); }; });

        auto* red = app.add_subcommand("reduce", "Support reduction from a start point");
        input_opt(red);
        red->add_option("--mode", mode_, "paper | constant | constant:<c>");
        red->add_option("--start", start_, "uniform or comma-separated coordinates");
        red->callback([this, &action] { action = [this] { run_reduce(); }; });

        auto* orc = app.add_subcommand("oracle", "Grid lower bound for the Lagrangian");
        input_opt(orc);
        orc->add_option("--mode", mode_, "paper | constant | constant:<c>");
        orc->add_option("--grid", grid_, "Grid resolution D");
        orc->add_option("--cap", grid_cap_, "Refuse grids with more points than this");
        orc->callback([this, &action] { action = [this] { run_oracle(); }; });
    }

    Json graph_header(std::size_t index, const InputGraph& ig) const {
        return {{"graph", index}, {"line", ig.line}, {"graph6", write_graph6(ig.graph)}, {"n", ig.graph.order()},
                {"edge_count", ig.graph.size()}};
    }

    void run_weights() {
        auto graphs = load(input_);
        if (fmt_ == Format::tsv) io_.out << "record\tgraph\tn_or_u\tm_or_v\ttotal_or_r\tbound_or_w\tslack\n";
        for (std::size_t k = 0; k < graphs.size(); ++k) {
            const auto& g = graphs[k].graph;
            auto rep = weight_report(g);
            switch (fmt_) {
            case Format::json: {
                Json j = graph_header(k + 1, graphs[k]);
                j.update(to_json(rep));
                emit(j);
                break;
            }
            case Format::tsv:
                io_.out << "graph\t" << k + 1 << "\t" << rep.n << "\t" << g.size() << "\t" << rep.total << "\t"
                        << rep.bound << "\t" << rep.slack << "\n";
                for (const auto& e : rep.records)
                    io_.out << "edge\t" << k + 1 << "\t" << e.u << "\t" << e.v << "\t" << e.r << "\t" << e.w << "\t\n";
                break;
            case Format::human:
                io_.out << "graph " << k + 1 << " (" << write_graph6(g) << "): n=" << rep.n << " m=" << g.size() << "\n";
                if (!rep.records.empty()) io_.out << "  u\tv\tr\tw\n";
                for (const auto& e : rep.records)
                    io_.out << "  " << e.u << "\t" << e.v << "\t" << e.r << "\t" << e.w << "\n";
                io_.out << "  total " << rep.total << "  bound " << rep.bound << "  slack " << rep.slack << "\n";
                break;
            }
            if (rep.slack.sign() < 0) throw TheoremViolation(std::move(rep));
        }
    }

    void run_verify() {
        auto graphs = load(input_);
        if (fmt_ == Format::tsv) io_.out << "graph\tgraph6\tn\tm\ttotal\tbound\tslack\ttight\n";
        for (std::size_t k = 0; k < graphs.size(); ++k) {
            const auto& g = graphs[k].graph;
            auto rep = weight_report(g);
            if (rep.slack.sign() < 0) throw TheoremViolation(std::move(rep));
            bool tight = rep.slack.is_zero();
            switch (fmt_) {
            case Format::json: {
                Json j = graph_header(k + 1, graphs[k]);
                j.update({{"total", rep.total.str()}, {"bound", rep.bound.str()}, {"slack", rep.slack.str()},
                          {"tight", tight}});
                emit(j);
                break;
            }
            case Format::tsv:
                io_.out << k + 1 << "\t" << write_graph6(g) << "\t" << rep.n << "\t" << g.size() << "\t" << rep.total
                        << "\t" << rep.bound << "\t" << rep.slack << "\t" << (tight ? "yes" : "no") << "\n";
                break;
            case Format::human:
                io_.out << "graph " << k + 1 << " (" << write_graph6(g) << "): W = " << rep.total
                        << " <= n^2/4 = " << rep.bound << ", slack " << rep.slack << (tight ? " (tight)" : "") << "\n";
                break;
            }
        }
    }

    void run_lagrangian() {
        auto scheme = WeightScheme::parse(mode_);
        auto graphs = load(input_);
        if (fmt_ == Format::tsv) io_.out << "graph\tclique\tstatus\tvalue\n";
        for (std::size_t k = 0; k < graphs.size(); ++k) {
            const auto& g = graphs[k].graph;
            auto out = exact_lagrangian(g, scheme, opt_.threads);
            std::optional<Rational> lower;
            if (scheme.mode() == WeightScheme::Mode::paper && g.order() > 0) {
                lower = uniform_value(weight_report(g));
                if (*lower > out.m || out.m > Rational(1, 4)) throw ChainViolation(write_graph6(g), *lower, out.m);
            }
            switch (fmt_) {
            case Format::json: {
                Json j = graph_header(k + 1, graphs[k]);
                j.update(to_json(out));
                j["mode"] = scheme.str();
                j["chain"] = lower ? Json{{"lower", lower->str()}, {"upper", "1/4"}, {"holds", true}} : Json(nullptr);
                emit(j);
                break;
            }
            case Format::tsv:
                for (const auto& c : out.candidates)
                    io_.out << k + 1 << "\t" << join(c.clique.vertices) << "\t" << to_string(c.status) << "\t"
                            << (c.value ? c.value->str() : "") << "\n";
                break;
            case Format::human:
                io_.out << "graph " << k + 1 << " (" << write_graph6(g) << "), " << scheme.str() << " weights\n"
                        << "  m = " << out.m << " on clique {" << join(out.support.vertices) << "}\n"
                        << "  witness " << out.witness.str() << "\n";
                if (lower) io_.out << "  chain " << *lower << " <= " << out.m << " <= 1/4\n";
                io_.out << "  " << out.candidates.size() << " candidate cliques\n";
                break;
            }
        }
    }

    void run_reduce() {
        auto scheme = WeightScheme::parse(mode_);
        auto graphs = load(input_);
        if (fmt_ == Format::tsv) io_.out << "graph\tstep\ti\tj\ts_i\ts_j\tf_before\tf_after\tpoint_after\n";
        for (std::size_t k = 0; k < graphs.size(); ++k) {
            const auto& g = graphs[k].graph;
            SimplexPoint start = start_ == "uniform" ? SimplexPoint::uniform(g.order()) : SimplexPoint::parse(start_);
            WeightedGraph wg(g, scheme);
            auto f0 = wg.f(start);
            auto res = support_reduce(wg, start);
            auto f1 = wg.f(res.point);
            switch (fmt_) {
            case Format::json: {
                Json j = graph_header(k + 1, graphs[k]);
                j.update({{"mode", scheme.str()}, {"start", to_json(start)}, {"final", to_json(res.point)},
                          {"f_start", f0.str()}, {"f_final", f1.str()}, {"steps", to_json(res.trace)}});
                emit(j);
                break;
            }
            case Format::tsv:
                for (std::size_t s = 0; s < res.trace.steps.size(); ++s) {
                    const auto& st = res.trace.steps[s];
                    io_.out << k + 1 << "\t" << s + 1 << "\t" << st.receiver << "\t" << st.donor << "\t"
                            << st.s_receiver << "\t" << st.s_donor << "\t" << st.f_before << "\t" << st.f_after << "\t"
                            << st.point_after.str() << "\n";
                }
                break;
            case Format::human:
                io_.out << "graph " << k + 1 << " (" << write_graph6(g) << "), " << scheme.str() << " weights\n"
                        << "  start " << start.str() << "  f = " << f0 << "\n";
                for (const auto& st : res.trace.steps)
                    io_.out << "  move " << st.donor << " -> " << st.receiver << "  s_i=" << st.s_receiver
                            << " s_j=" << st.s_donor << "  f " << st.f_before << " -> " << st.f_after << "\n";
                io_.out << "  final " << res.point.str() << "  f = " << f1 << "  (" << res.trace.steps.size()
                        << " steps)\n";
                break;
            }
        }
    }

    void run_oracle() {
        auto scheme = WeightScheme::parse(mode_);
        auto graphs = load(input_);
        if (fmt_ == Format::tsv) io_.out << "graph\tgrid\tvalue\tpoint\n";
        for (std::size_t k = 0; k < graphs.size(); ++k) {
            const auto& g = graphs[k].graph;
            auto res = grid_search(g, scheme, grid_, grid_cap_);
            switch (fmt_) {
            case Format::json: {
                Json j = graph_header(k + 1, graphs[k]);
                j.update({{"mode", scheme.str()}, {"grid", grid_}, {"value", res.value.str()},
                          {"point", to_json(res.point)}});
                emit(j);
                break;
            }
            case Format::tsv:
                io_.out << k + 1 << "\t" << grid_ << "\t" << res.value << "\t" << res.point.str() << "\n";
                break;
            case Format::human:
                io_.out << "graph " << k + 1 << " (" << write_graph6(g) << "): grid " << grid_ << " max "
                        << res.value << " at " << res.point.str() << "\n";
                break;
            }
        }
    }

    // ---------------------------------------------------------------- campaigns

    void add_campaigns(CLI::App& app, std::function<void()>& action) {
        auto* sweep = app.add_subcommand("sweep", "Check every labeled graph on n vertices");
        sweep->add_option("--n", n_, "Vertex count")->required();
        sweep->add_option("--cap", sweep_cap_, "Largest n accepted");
        sweep->callback([this, &action] { action = [this] { run_sweep(); }; });

        auto* fuzz = app.add_subcommand("fuzz", "Check random G(n,p) graphs");
        fuzz->add_option("--n", n_, "Vertex count")->required();
        fuzz->add_option("--p", p_, "Edge probability as a rational")->required();
        fuzz->add_option("--count", count_, "Number of graphs");
        fuzz->add_option("--seed", seed_, "Campaign seed");
        fuzz->add_option("--lagrangian-cap", lagrangian_cap_, "Lagrangian chain check only for n <= this");
        fuzz->callback([this, &action] { action = [this] { run_fuzz(); }; });

        auto* cor = app.add_subcommand("corollary", "Check the Turan edge bound on random subgraphs of T(n,r)");
        cor->add_option("--n", n_, "Vertex count")->required();
        cor->add_option("--r", r_, "Part count")->required();
        cor->add_option("--count", count_, "Number of graphs");
        cor->add_option("--seed", seed_, "Campaign seed");
        cor->callback([this, &action] { action = [this] { run_corollary(); }; });
    }

    void print_stats(const SweepStats& s, Json extra) {
        switch (fmt_) {
        case Format::json: {
            Json j = to_json(s);
            j.update(extra);
            emit(j);
            break;
        }
        case Format::tsv:
            io_.out << "n\tgraphs_checked\tviolations\tmin_slack\ttight_count\tmax_total_weight\tlagrangian_checked\n"
                    << s.n << "\t" << s.graphs_checked << "\t" << s.violations << "\t" << s.min_slack << "\t"
                    << s.tight_count << "\t" << s.max_total_weight << "\t" << s.lagrangian_checked << "\n";
            break;
        case Format::human:
            io_.out << "n                   " << s.n << "\n"
                    << "graphs checked      " << s.graphs_checked << "\n"
                    << "violations          " << s.violations << "\n"
                    << "min slack           " << s.min_slack << "\n"
                    << "max total           " << s.max_total_weight << "\n"
                    << "tight graphs        " << s.tight_count << "\n";
            if (s.lagrangian_checked) io_.out << "lagrangian checked  " << s.lagrangian_checked << "\n";
            for (const auto& t : s.tight_examples) io_.out << "  tight " << t << "\n";
            break;
        }
    }

    void run_sweep() {
        auto h = harness_options();
        h.max_sweep_n = sweep_cap_;
        print_stats(sweep_all_graphs(n_, h), {{"campaign", "sweep"}});
    }

    void run_fuzz() {
        auto h = harness_options();
        h.lagrangian_cap = lagrangian_cap_;
        auto p = Rational::parse(p_);
        print_stats(fuzz_random(n_, p, count_, seed_, h),
                    {{"campaign", "fuzz"}, {"p", p.str()}, {"count", count_}, {"seed", seed_}});
    }

    void run_corollary() {
        print_stats(corollary_campaign(n_, r_, count_, seed_, harness_options()),
                    {{"campaign", "corollary"}, {"r", r_}, {"count", count_}, {"seed", seed_},
                     {"bound", turan_edge_bound(n_, r_).str()}});
    }

    Streams io_;
    Options opt_;
    Format fmt_ = Format::human;

    std::string gen_kind_;
    std::vector<std::string> gen_params_;
    std::string input_ = "-";
    std::string mode_ = "paper";
    std::string start_ = "uniform";
    std::uint64_t grid_ = 40;
    std::uint64_t grid_cap_ = default_grid_cap;
    std::size_t n_ = 0;
    std::size_t r_ = 2;
    std::string p_;
    std::uint64_t count_ = 1;
    std::uint64_t seed_ = 0;
    std::size_t sweep_cap_ = 7;
    std::size_t lagrangian_cap_ = 12;
};

} // namespace detail

/// `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    return detail::App(Streams{in, out, err}).run(args);
}

} // namespace wturan::cli
