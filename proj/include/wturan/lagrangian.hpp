#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "wturan/clique.hpp"
#include "wturan/error.hpp"
#include "wturan/graph.hpp"
#include "wturan/linear_solve.hpp"
#include "wturan/rational.hpp"
#include "wturan/weights.hpp"

namespace wturan {

/// How edges are weighted in the quadratic form. `paper` uses the clique
/// weight r/(2(r-1)); `constant` gives every edge the same positive weight
/// (c = 1 is the classical unweighted Lagrangian).
class WeightScheme {
public:
    enum class Mode { paper, constant };

    static WeightScheme paper() { return WeightScheme(Mode::paper, Rational(1)); }

    static WeightScheme constant(Rational c) {
        if (c.sign() <= 0) throw InvalidArgument("constant edge weight must be positive, got " + c.str());
        return WeightScheme(Mode::constant, std::move(c));
    }

    /// "paper", "constant" (c = 1) or "constant:<rational>".
    static WeightScheme parse(std::string_view s) {
        if (s == "paper") return paper();
        if (s == "constant") return constant(Rational(1));
        if (s.starts_with("constant:")) return constant(Rational::parse(s.substr(9)));
        throw InvalidArgument("unknown weight mode '" + std::string(s) + "'");
    }

    Mode mode() const noexcept { return mode_; }
    const Rational& constant_value() const noexcept { return c_; }

    std::string str() const { return mode_ == Mode::paper ? "paper" : "constant:" + c_.str(); }

private:
    WeightScheme(Mode m, Rational c) : mode_(m), c_(std::move(c)) {}

    Mode mode_;
    Rational c_;
};

/// Point of the standard simplex: nonnegative exact coordinates summing to 1.
/// The zero-dimensional point (no coordinates) stands for the empty simplex
/// of the graph with no vertices.
class SimplexPoint {
public:
    SimplexPoint() = default;

    explicit SimplexPoint(std::vector<Rational> coords) : x_(std::move(coords)) {
        if (x_.empty()) return;
        Rational sum;
        for (std::size_t i = 0; i < x_.size(); ++i) {
            if (x_[i].sign() < 0) throw InvalidArgument("simplex coordinate " + std::to_string(i) + " is negative");
            sum += x_[i];
        }
        if (sum != Rational(1)) throw InvalidArgument("simplex coordinates sum to " + sum.str() + ", not 1");
    }

    static SimplexPoint uniform(std::size_t n) {
        return n == 0 ? SimplexPoint() : SimplexPoint(std::vector<Rational>(n, Rational(1, n)));
    }

    static SimplexPoint vertex(std::size_t n, Vertex i) {
        std::vector<Rational> x(n);
        x.at(i) = Rational(1);
        return SimplexPoint(std::move(x));
    }

    /// Comma-separated rationals, e.g. "1/2,1/4,1/4".
    static SimplexPoint parse(std::string_view s) {
        std::vector<Rational> x;
        while (true) {
            auto comma = s.find(',');
            auto tok = s.substr(0, comma);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            x.push_back(Rational::parse(tok));
            if (comma == std::string_view::npos) break;
            s.remove_prefix(comma + 1);
        }
        return SimplexPoint(std::move(x));
    }

    std::size_t dimension() const noexcept { return x_.size(); }
    const Rational& operator[](std::size_t i) const { return x_[i]; }
    std::span<const Rational> coords() const noexcept { return x_; }

    std::vector<Vertex> support() const {
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < x_.size(); ++i)
            if (x_[i].sign() > 0) s.push_back(i);
        return s;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < x_.size(); ++i) out += (i ? "," : "") + x_[i].str();
        return out;
    }

    friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

private:
    std::vector<Rational> x_;
};

/// Graph plus its edge weights under a scheme, as a dense symmetric matrix.
class WeightedGraph {
public:
    WeightedGraph(const Graph& g, const WeightScheme& scheme) : g_(&g), w_(g.order() * g.order()) {
        for (auto [u, v] : g.edges()) {
            Rational w = scheme.mode() == WeightScheme::Mode::paper ? edge_weight(edge_clique_number(g, u, v))
                                                                    : scheme.constant_value();
            w_[u * g.order() + v] = w;
            w_[v * g.order() + u] = std::move(w);
        }
    }

    WeightedGraph(Graph&&, const WeightScheme&) = delete;

    const Graph& graph() const noexcept { return *g_; }
    std::size_t order() const noexcept { return g_->order(); }

    /// 0 for non-adjacent pairs.
    const Rational& weight(Vertex i, Vertex j) const { return w_[i * order() + j]; }

    /// f(x) = sum over edges ij of w_ij x_i x_j.
    Rational f(const SimplexPoint& x) const {
        check_dimension(x);
        Rational acc;
        for (auto [u, v] : g_->edges())
            if (x[u].sign() > 0 && x[v].sign() > 0) acc += weight(u, v) * x[u] * x[v];
        return acc;
    }

    /// s_i(x) = sum over neighbours k of i of w_ik x_k.
    Rational side_sum(const SimplexPoint& x, Vertex i) const {
        check_dimension(x);
        if (i >= order()) throw InvalidArgument("vertex " + std::to_string(i) + " out of range");
        Rational acc;
        auto nb = g_->neighbors(i);
        for (Vertex k = nb.first(); k < order(); k = nb.next(k + 1))
            if (x[k].sign() > 0) acc += weight(i, k) * x[k];
        return acc;
    }

private:
    void check_dimension(const SimplexPoint& x) const {
        if (x.dimension() != order())
            throw InvalidArgument("point has " + std::to_string(x.dimension()) + " coordinates, graph has " +
                                  std::to_string(order()) + " vertices");
    }

    const Graph* g_;
    std::vector<Rational> w_;
};

inline Rational f_eval(const Graph& g, const WeightScheme& scheme, const SimplexPoint& x) {
    return WeightedGraph(g, scheme).f(x);
}

inline Rational side_sum(const Graph& g, const WeightScheme& scheme, const SimplexPoint& x, Vertex i) {
    return WeightedGraph(g, scheme).side_sum(x, i);
}

// ------------------------------------------------------------ support reduction

/// One mass shift: all of `donor`'s mass moves to `receiver`. The two are
/// non-adjacent and s_receiver >= s_donor, so f rises by x_donor (s_r - s_d).
struct ReductionStep {
    Vertex receiver = 0;  // i
    Vertex donor = 0;     // j
    Rational s_receiver;
    Rational s_donor;
    Rational f_before;
    Rational f_after;
    SimplexPoint point_after;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

struct ReductionResult {
    SimplexPoint point;
    ReductionTrace trace;
};

/// Repeatedly takes the lexicographically first non-adjacent pair (a, b),
/// a < b, with both coordinates positive and moves the mass of the vertex
/// with the smaller side sum onto the other (ties go to a). Stops when the
/// support is a clique, after at most n - 1 steps. f never decreases.
inline ReductionResult support_reduce(const WeightedGraph& wg, SimplexPoint x) {
    const Graph& g = wg.graph();
    ReductionResult res;
    Rational f_cur = wg.f(x);
    while (true) {
        auto supp = x.support();
        std::optional<Edge> pair;
        for (std::size_t a = 0; a < supp.size() && !pair; ++a)
            for (std::size_t b = a + 1; b < supp.size(); ++b)
                if (!g.adjacent(supp[a], supp[b])) {
                    pair = Edge{supp[a], supp[b]};
                    break;
                }
        if (!pair) break;

        auto [a, b] = *pair;
        Rational sa = wg.side_sum(x, a), sb = wg.side_sum(x, b);
        bool keep_a = sa >= sb;
        Vertex recv = keep_a ? a : b, donor = keep_a ? b : a;

        std::vector<Rational> next(x.coords().begin(), x.coords().end());
        next[recv] += next[donor];
        next[donor] = Rational();
        SimplexPoint moved(std::move(next));
        Rational f_next = wg.f(moved);

        res.trace.steps.push_back({recv, donor, keep_a ? sa : sb, keep_a ? sb : sa, f_cur, f_next, moved});
        x = std::move(moved);
        f_cur = std::move(f_next);
    }
    res.point = std::move(x);
    return res;
}

inline ReductionResult support_reduce(const Graph& g, const WeightScheme& scheme, SimplexPoint x) {
    return support_reduce(WeightedGraph(g, scheme), std::move(x));
}

// ------------------------------------------------------------ exact maximum

enum class CandidateStatus { interior_solution, no_positive_solution, singular_skipped };

inline std::string_view to_string(CandidateStatus s) {
    switch (s) {
    case CandidateStatus::interior_solution: return "interior-solution";
    case CandidateStatus::no_positive_solution: return "no-positive-solution";
    case CandidateStatus::singular_skipped: return "singular-skipped";
    }
    return "?";
}

struct LagrangianCandidate {
    CliqueSet clique;
    CandidateStatus status = CandidateStatus::singular_skipped;
    std::optional<Rational> value;    // lambda / 2, only for interior solutions
    std::vector<Rational> solution;   // x restricted to the clique, when solved
};

struct LagrangianOutcome {
    Rational m;
    CliqueSet support;
    SimplexPoint witness;
    std::vector<LagrangianCandidate> candidates;  // clique enumeration order
};

/// Stationarity system on clique S:
///   sum_{j in S, j != i} w_ij x_j - lambda = 0   for i in S
///   sum_{i in S} x_i = 1
inline LagrangianCandidate solve_clique_candidate(const WeightedGraph& wg, CliqueSet clique) {
    const std::size_t k = clique.size();
    RationalMatrix a(k + 1, std::vector<Rational>(k + 1));
    std::vector<Rational> b(k + 1);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            if (r != c) a[r][c] = wg.weight(clique.vertices[r], clique.vertices[c]);
        a[r][k] = Rational(-1);
        a[k][r] = Rational(1);
    }
    b[k] = Rational(1);

    LagrangianCandidate cand{std::move(clique), CandidateStatus::singular_skipped, std::nullopt, {}};
    auto sol = solve_linear_system(a, b);
    if (!sol) return cand;
    Rational lambda = (*sol)[k];
    sol->pop_back();
    bool positive = std::all_of(sol->begin(), sol->end(), [](const Rational& x) { return x.sign() > 0; });
    cand.solution = std::move(*sol);
    if (!positive) {
        cand.status = CandidateStatus::no_positive_solution;
        return cand;
    }
    cand.status = CandidateStatus::interior_solution;
    cand.value = lambda / Rational(2);
    return cand;
}

/// Exact maximum of f over the simplex. A maximizer of minimum support lies
/// on a clique and is a nondegenerate interior critical point of that face,
/// so solving the stationarity system on every clique and keeping the best
/// positive solution finds it. Output is independent of `threads`.
inline LagrangianOutcome exact_lagrangian(const Graph& g, const WeightScheme& scheme, unsigned threads = 1) {
    WeightedGraph wg(g, scheme);
    auto cliques = enumerate_cliques(g);

    LagrangianOutcome out;
    out.candidates.resize(cliques.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out.candidates[i] = solve_clique_candidate(wg, std::move(cliques[i]));
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(cliques.size() / 64 + 1)));
    if (threads == 1) {
        work(0, cliques.size());
    } else {
        std::vector<std::jthread> pool;
        std::size_t chunk = (cliques.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t begin = std::min(cliques.size(), t * chunk), end = std::min(cliques.size(), begin + chunk);
            pool.emplace_back(work, begin, end);
        }
    }

    const LagrangianCandidate* best = nullptr;
    for (const auto& c : out.candidates)
        if (c.value && (!best || *c.value > *best->value)) best = &c;

    if (!best) {
        out.witness = SimplexPoint::uniform(g.order());  // only when n == 0
        return out;
    }
    out.m = *best->value;
    out.support = best->clique;
    std::vector<Rational> x(g.order());
    for (std::size_t i = 0; i < best->clique.size(); ++i) x[best->clique.vertices[i]] = best->solution[i];
    out.witness = SimplexPoint(std::move(x));
    return out;
}

/// W(g) / n^2 = f at the barycentre; the lower end of W/n^2 <= m <= 1/4.
inline Rational uniform_value(const WeightReport& rep) {
    return rep.n == 0 ? Rational() : rep.total / Rational(rep.n * rep.n);
}

/// Closed form 1/2 (1 - 1/omega) of the unweighted Lagrangian; 0 when omega <= 1.
inline Rational motzkin_straus_value(const Graph& g) {
    auto omega = max_clique_size(g);
    if (omega <= 1) return Rational();
    return Rational(omega - 1, 2 * omega);
}

// ------------------------------------------------------------ grid oracle

inline constexpr std::uint64_t default_grid_cap = 5'000'000;

struct GridResult {
    Rational value;
    SimplexPoint point;  // first maximizer in composition order
};

inline mpz_class composition_count(std::size_t n, std::uint64_t d) {
    if (n == 0) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), d + n - 1, n - 1);
    return c;
}

namespace detail {

// Enumerates compositions k of d into n parts in lexicographically
// decreasing order of k (k_0 = d first), maximizing sum_{u<v} a_uv k_u k_v.
template <class Int>
struct GridWalk {
    std::size_t n;
    const std::vector<Int>& a;  // n*n integer weights
    std::vector<std::uint64_t> k, best_k;
    Int best{};
    bool have = false;

    void walk(std::size_t v, std::uint64_t left, const Int& acc) {
        if (v + 1 == n) {
            k[v] = left;
            Int total = acc + partial_at(v) * Int(left);
            if (!have || total > best) {
                best = total;
                best_k = k;
                have = true;
            }
            return;
        }
        for (std::uint64_t kv = left + 1; kv-- > 0;) {
            k[v] = kv;
            Int gain = partial_at(v) * Int(kv);
            walk(v + 1, left - kv, acc + gain);
        }
    }

    Int partial_at(std::size_t v) const {
        Int s{};
        for (std::size_t u = 0; u < v; ++u)
            if (k[u]) s += a[u * n + v] * Int(k[u]);
        return s;
    }
};

} // namespace detail

/// Maximum of f over the grid points k/d of the simplex (all compositions of
/// d into n parts). Refuses when there are more than `cap` compositions.
inline GridResult grid_search(const Graph& g, const WeightScheme& scheme, std::uint64_t d,
                              std::uint64_t cap = default_grid_cap) {
    if (d < 1) throw InvalidArgument("grid resolution must be >= 1");
    const std::size_t n = g.order();
    if (n == 0) return {};
    if (auto count = composition_count(n, d); count > mpz_class(static_cast<unsigned long>(cap)))
        throw InvalidArgument("grid has " + count.get_str() + " points, above the cap of " + std::to_string(cap));

    WeightedGraph wg(g, scheme);
    // Common denominator: f(k/d) = (sum a_uv k_u k_v) / (L d^2).
    mpz_class lcm = 1;
    for (auto [u, v] : g.edges()) {
        auto den = wg.weight(u, v).denominator();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> big(n * n);
    mpz_class sum_a = 0;
    for (auto [u, v] : g.edges()) {
        const auto& w = wg.weight(u, v);
        big[u * n + v] = big[v * n + u] = w.numerator() * (lcm / w.denominator());
        sum_a += big[u * n + v];
    }

    auto finish = [&](const auto& best, const std::vector<std::uint64_t>& best_k) {
        std::vector<Rational> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = Rational(best_k[i], d);
        mpz_class best_z;
        if constexpr (std::is_same_v<std::decay_t<decltype(best)>, mpz_class>) best_z = best;
        else best_z = mpz_class(static_cast<long>(best));
        mpz_class den = lcm * mpz_class(static_cast<unsigned long>(d)) * mpz_class(static_cast<unsigned long>(d));
        return GridResult{Rational(best_z, den), SimplexPoint(std::move(x))};
    };

    // Every partial objective is at most sum_a * d^2.
    mpz_class worst = sum_a * mpz_class(static_cast<unsigned long>(d)) * mpz_class(static_cast<unsigned long>(d));
    if (worst.fits_slong_p()) {
        std::vector<long> a(n * n);
        for (std::size_t i = 0; i < n * n; ++i) a[i] = big[i].get_si();
        detail::GridWalk<long> gw{n, a, std::vector<std::uint64_t>(n), {}, 0, false};
        gw.walk(0, d, 0);
        return finish(gw.best, gw.best_k);
    }
    detail::GridWalk<mpz_class> gw{n, big, std::vector<std::uint64_t>(n), {}, 0, false};
    gw.walk(0, d, mpz_class(0));
    return finish(gw.best, gw.best_k);
}

inline Rational grid_oracle(const Graph& g, const WeightScheme& scheme, std::uint64_t d,
                            std::uint64_t cap = default_grid_cap) {
    return grid_search(g, scheme, d, cap).value;
}

} // namespace wturan
