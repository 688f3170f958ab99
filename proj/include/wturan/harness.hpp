#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "wturan/error.hpp"
#include "wturan/graph.hpp"
#include "wturan/graph6.hpp"
#include "wturan/lagrangian.hpp"
#include "wturan/rational.hpp"
#include "wturan/weights.hpp"

namespace wturan {

/// Aggregate of a verification campaign. In the theorem campaigns `slack`
/// is n^2/4 - W(G) and `max_total_weight` is the largest W(G). In the
/// corollary campaign they are (1 - 1/r) n^2/2 - e(G) and the largest e(G).
struct SweepStats {
    std::size_t n = 0;
    std::uint64_t graphs_checked = 0;
    std::uint64_t violations = 0;
    Rational min_slack;
    std::uint64_t tight_count = 0;
    std::vector<std::string> tight_examples;  // graph6, first ones in campaign order
    Rational max_total_weight;
    std::uint64_t lagrangian_checked = 0;
    std::vector<std::uint64_t> tight_masks;  // sweep only, when requested

    /// Folds in one checked graph.
    void record(const Graph& g, const Rational& slack, const Rational& total, std::size_t example_cap) {
        if (graphs_checked == 0 || slack < min_slack) min_slack = slack;
        if (graphs_checked == 0 || total > max_total_weight) max_total_weight = total;
        ++graphs_checked;
        if (slack.is_zero()) {
            ++tight_count;
            if (tight_examples.size() < example_cap) tight_examples.push_back(write_graph6(g));
        }
    }

    /// Appends `later`, which covers graphs after all of this one's.
    void merge(const SweepStats& later, std::size_t example_cap) {
        if (later.graphs_checked == 0) return;
        if (graphs_checked == 0 || later.min_slack < min_slack) min_slack = later.min_slack;
        if (graphs_checked == 0 || later.max_total_weight > max_total_weight) max_total_weight = later.max_total_weight;
        graphs_checked += later.graphs_checked;
        violations += later.violations;
        tight_count += later.tight_count;
        lagrangian_checked += later.lagrangian_checked;
        for (const auto& s : later.tight_examples)
            if (tight_examples.size() < example_cap) tight_examples.push_back(s);
        tight_masks.insert(tight_masks.end(), later.tight_masks.begin(), later.tight_masks.end());
    }
};

struct HarnessOptions {
    unsigned threads = 1;
    std::size_t max_sweep_n = 7;
    std::size_t tight_example_cap = 16;
    std::size_t lagrangian_cap = 12;  // fuzz: Lagrangian chain only for n <= this
    bool collect_tight_masks = false;
};

/// The chain W/n^2 <= m <= 1/4 failed for a graph.
class ChainViolation : public InvariantViolation {
public:
    ChainViolation(const std::string& graph6, const Rational& lower, const Rational& m)
        : InvariantViolation("Lagrangian chain W/n^2 <= m <= 1/4 fails for " + graph6 + ": W/n^2 = " + lower.str() +
                             ", m = " + m.str()) {}
};

/// A K_{r+1}-free graph had more than (1 - 1/r) n^2/2 edges.
class CorollaryViolation : public InvariantViolation {
public:
    CorollaryViolation(const std::string& graph6, std::size_t r)
        : InvariantViolation("Turan edge bound with r=" + std::to_string(r) + " fails for " + graph6) {}
};

namespace detail {

// Runs shard(k, stats) for k in [0, shards) on up to `threads` threads and
// merges the per-shard stats in shard order. The first failing shard's
// exception (in shard order) is rethrown.
inline SweepStats run_sharded(std::size_t n, std::size_t shards, unsigned threads, std::size_t example_cap,
                              const std::function<void(std::size_t, SweepStats&)>& shard) {
    std::vector<SweepStats> parts(shards);
    std::vector<std::exception_ptr> errors(shards);
    auto worker = [&](unsigned t, unsigned stride) {
        for (std::size_t k = t; k < shards; k += stride) {
            try {
                parts[k].n = n;
                shard(k, parts[k]);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(shards, 1))));
    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    SweepStats total;
    total.n = n;
    for (const auto& p : parts) total.merge(p, example_cap);
    return total;
}

inline std::size_t shard_count(std::uint64_t items, unsigned threads) {
    return static_cast<std::size_t>(std::min<std::uint64_t>(items, std::max(1U, threads) * 8ULL));
}

} // namespace detail

/// Checks the weighted bound on every labeled graph with n vertices. Graph
/// number `mask` has edge set {pair_order(n)[b] : bit b of mask set}.
inline SweepStats sweep_all_graphs(std::size_t n, const HarnessOptions& opts = {}) {
    if (n > opts.max_sweep_n)
        throw InvalidArgument("sweep n=" + std::to_string(n) + " exceeds the cap of " + std::to_string(opts.max_sweep_n));
    if (n > 11) throw InvalidArgument("sweep supports n <= 11");
    const std::uint64_t total = std::uint64_t{1} << (n * (n == 0 ? 0 : n - 1) / 2);
    const std::size_t shards = detail::shard_count(total, opts.threads);
    return detail::run_sharded(n, shards, opts.threads, opts.tight_example_cap, [&](std::size_t k, SweepStats& st) {
        std::uint64_t begin = total / shards * k + std::min<std::uint64_t>(k, total % shards);
        std::uint64_t end = begin + total / shards + (k < total % shards ? 1 : 0);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            Graph g = from_pair_mask(n, mask);
            auto rep = weight_report(g);
            if (rep.slack.sign() < 0) throw TheoremViolation(std::move(rep));
            st.record(g, rep.slack, rep.total, opts.tight_example_cap);
            if (opts.collect_tight_masks && rep.slack.is_zero()) st.tight_masks.push_back(mask);
        }
    });
}

/// Checks the weighted bound, and for n <= lagrangian_cap also the chain
/// W/n^2 <= m <= 1/4, on `count` G(n, p) draws. Draw i uses seed
/// derive_seed(seed, i).
inline SweepStats fuzz_random(std::size_t n, const Rational& p, std::uint64_t count, std::uint64_t seed,
                              const HarnessOptions& opts = {}) {
    if (count < 1) throw InvalidArgument("fuzz count must be >= 1");
    [[maybe_unused]] BernoulliThreshold validate(p);
    const std::size_t shards = detail::shard_count(count, opts.threads);
    return detail::run_sharded(n, shards, opts.threads, opts.tight_example_cap, [&](std::size_t k, SweepStats& st) {
        std::uint64_t begin = count / shards * k + std::min<std::uint64_t>(k, count % shards);
        std::uint64_t end = begin + count / shards + (k < count % shards ? 1 : 0);
        for (std::uint64_t i = begin; i < end; ++i) {
            Graph g = random_gnp(n, p, derive_seed(seed, i));
            auto rep = weight_report(g);
            if (rep.slack.sign() < 0) throw TheoremViolation(std::move(rep));
            if (n <= opts.lagrangian_cap && n > 0) {
                auto out = exact_lagrangian(g, WeightScheme::paper());
                auto lower = uniform_value(rep);
                if (lower > out.m || out.m > Rational(1, 4)) throw ChainViolation(write_graph6(g), lower, out.m);
                ++st.lagrangian_checked;
            }
            st.record(g, rep.slack, rep.total, opts.tight_example_cap);
        }
    });
}

/// Checks e(H) <= (1 - 1/r) n^2/2 on `count` random spanning subgraphs H of
/// T(n, r), each edge kept with probability 1/2 (draw i seeded by
/// derive_seed(seed, i)).
inline SweepStats corollary_campaign(std::size_t n, std::size_t r, std::uint64_t count, std::uint64_t seed,
                                     const HarnessOptions& opts = {}) {
    if (r < 2) throw InvalidArgument("corollary campaign needs r >= 2");
    if (count < 1) throw InvalidArgument("corollary count must be >= 1");
    const Graph base = turan_graph(n, r);
    const Rational bound = turan_edge_bound(n, r);
    const std::size_t shards = detail::shard_count(count, opts.threads);
    return detail::run_sharded(n, shards, opts.threads, opts.tight_example_cap, [&](std::size_t k, SweepStats& st) {
        std::uint64_t begin = count / shards * k + std::min<std::uint64_t>(k, count % shards);
        std::uint64_t end = begin + count / shards + (k < count % shards ? 1 : 0);
        for (std::uint64_t i = begin; i < end; ++i) {
            Graph h = random_spanning_subgraph(base, Rational(1, 2), derive_seed(seed, i));
            if (!turan_corollary_check(h, r)) throw CorollaryViolation(write_graph6(h), r);
            Rational edges(h.size());
            st.record(h, bound - edges, edges, opts.tight_example_cap);
        }
    });
}

} // namespace wturan
