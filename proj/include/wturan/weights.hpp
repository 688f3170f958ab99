#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wturan/clique.hpp"
#include "wturan/error.hpp"
#include "wturan/graph.hpp"
#include "wturan/rational.hpp"

namespace wturan {

/// Weight of an edge whose largest containing clique has r vertices:
/// r / (2(r-1)). Strictly decreasing in r, from 1 at r = 2 towards 1/2.
inline Rational edge_weight(std::size_t r) {
    if (r < 2) throw InvalidArgument("edge clique number must be >= 2, got " + std::to_string(r));
    return Rational(r, 2 * (r - 1));
}

struct EdgeWeightRecord {
    Vertex u = 0;
    Vertex v = 0;
    std::size_t r = 0;
    Rational w;
};

struct WeightReport {
    std::size_t n = 0;
    std::vector<EdgeWeightRecord> records;  // lexicographic edge order
    Rational total;
    Rational bound;  // n^2 / 4
    Rational slack;  // bound - total
};

/// Raised when a graph's clique-weighted edge total exceeds n^2/4. The
/// inequality is a theorem, so this always indicates a defect.
class TheoremViolation : public InvariantViolation {
public:
    explicit TheoremViolation(WeightReport report)
        : InvariantViolation("weighted edge total " + report.total.str() + " exceeds n^2/4 = " + report.bound.str() +
                             " (n=" + std::to_string(report.n) + ")"),
          report_(std::move(report)) {}

    const WeightReport& report() const noexcept { return report_; }

private:
    WeightReport report_;
};

inline Rational quarter_square(std::size_t n) { return Rational(n * n, 4); }

inline WeightReport weight_report(const Graph& g) {
    WeightReport rep;
    rep.n = g.order();
    for (auto [u, v] : g.edges()) {
        auto r = edge_clique_number(g, u, v);
        rep.records.push_back({u, v, r, edge_weight(r)});
        rep.total += rep.records.back().w;
    }
    rep.bound = quarter_square(g.order());
    rep.slack = rep.bound - rep.total;
    return rep;
}

/// Slack n^2/4 - W(g), or TheoremViolation if it is negative.
inline Rational verify_theorem(const Graph& g) {
    auto rep = weight_report(g);
    if (rep.slack.sign() < 0) throw TheoremViolation(std::move(rep));
    return rep.slack;
}

/// (1 - 1/r) n^2 / 2, the Turán edge bound for K_{r+1}-free graphs.
inline Rational turan_edge_bound(std::size_t n, std::size_t r) {
    if (r < 1) throw InvalidArgument("turan_edge_bound needs r >= 1");
    return (Rational(1) - Rational(1, r)) * Rational(n * n, 2);
}

/// Edge-count form of the theorem for K_{r+1}-free g: e(g) <= (1 - 1/r) n^2/2.
inline bool turan_corollary_check(const Graph& g, std::size_t r) {
    if (r < 2) throw InvalidArgument("turan_corollary_check needs r >= 2");
    if (auto omega = max_clique_size(g); omega > r)
        throw InvalidArgument("graph contains K_" + std::to_string(omega) + ", not K_" + std::to_string(r + 1) +
                              "-free");
    return Rational(g.size()) <= turan_edge_bound(g.order(), r);
}

} // namespace wturan
