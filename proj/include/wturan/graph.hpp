#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wturan/error.hpp"
#include "wturan/random.hpp"
#include "wturan/rational.hpp"
#include "wturan/vertex_set.hpp"

namespace wturan {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, stored as one adjacency
/// bitset row per vertex. Immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n)
        : n_(n), words_((n + VertexSet::word_bits - 1) / VertexSet::word_bits), adj_(n * words_, 0) {}

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (row(u)[v / VertexSet::word_bits] >> (v % VertexSet::word_bits)) & 1U;
    }

    std::span<const std::uint64_t> row(Vertex v) const noexcept {
        return {adj_.data() + v * words_, words_};
    }

    VertexSet neighbors(Vertex v) const { return VertexSet(n_, row(v)); }

    std::size_t degree(Vertex v) const { return neighbors(v).count(); }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n_; ++u) {
            auto nb = neighbors(u);
            for (Vertex v = nb.next(u + 1); v < n_; v = nb.next(v + 1)) out.emplace_back(u, v);
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Mutable staging area for a Graph. Duplicate and reversed edges collapse.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : g_(n) {}

    GraphBuilder& add_edge(Vertex u, Vertex v) {
        if (u >= g_.n_ || v >= g_.n_)
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(g_.n_));
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        if (!g_.adjacent(u, v)) {
            set_bit(u, v);
            set_bit(v, u);
            ++g_.m_;
        }
        return *this;
    }

    std::size_t order() const noexcept { return g_.n_; }

    Graph build() && { return std::move(g_); }
    Graph build() const& { return g_; }

private:
    void set_bit(Vertex u, Vertex v) noexcept {
        g_.adj_[u * g_.words_ + v / VertexSet::word_bits] |= std::uint64_t{1} << (v % VertexSet::word_bits);
    }

    Graph g_;
};

inline Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Pair (i, j), i < j, at position `index` of the order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... used for adjacency masks.
inline std::vector<Edge> pair_order(std::size_t n) {
    std::vector<Edge> out;
    out.reserve(n < 2 ? 0 : n * (n - 1) / 2);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

/// Graph whose edge set is the set bits of `mask` over pair_order(n).
inline Graph from_pair_mask(std::size_t n, std::uint64_t mask) {
    if (n > 11) throw InvalidArgument("adjacency masks support n <= 11");
    GraphBuilder b(n);
    std::size_t bit = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1U) b.add_edge(i, j);
    return std::move(b).build();
}

// ---------------------------------------------------------------- generators

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete_graph(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
    return std::move(b).build();
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InvalidArgument("cycle_graph needs n >= 3");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

/// Part index of every vertex in the Turán graph T(n, r). The first n mod r
/// parts have ceil(n/r) vertices, the rest floor(n/r); parts are contiguous.
inline std::vector<std::size_t> turan_parts(std::size_t n, std::size_t r) {
    if (r == 0) throw InvalidArgument("turan_graph needs r >= 1");
    std::vector<std::size_t> part(n);
    std::size_t base = n / r, extra = n % r, v = 0;
    for (std::size_t p = 0; p < r && v < n; ++p)
        for (std::size_t k = 0; k < base + (p < extra ? 1 : 0); ++k) part[v++] = p;
    return part;
}

/// Complete r-partite graph on n vertices with part sizes as equal as possible.
inline Graph turan_graph(std::size_t n, std::size_t r) {
    auto part = turan_parts(n, r);
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (part[i] != part[j]) b.add_edge(i, j);
    return std::move(b).build();
}

/// Exact Bernoulli(p) trial on 64-bit uniform words: success iff u * q < p_num * 2^64,
/// where p = p_num / q in lowest terms.
class BernoulliThreshold {
public:
    explicit BernoulliThreshold(const Rational& p) {
        if (p.sign() < 0 || p > Rational(1)) throw InvalidArgument("probability " + p.str() + " outside [0,1]");
        mpz_class scaled = p.numerator() << 64;
        mpz_class t;
        mpz_cdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), p.denominator().get_mpz_t());
        always_ = t > mpz_class(~0UL);
        if (!always_) threshold_ = t.get_ui();
    }

    bool operator()(std::uint64_t u) const noexcept { return always_ || u < threshold_; }

private:
    bool always_ = false;
    std::uint64_t threshold_ = 0;
};

/// G(n, p): pairs visited in pair_order(n), one xoshiro256** draw per pair.
inline Graph random_gnp(std::size_t n, const Rational& p, std::uint64_t seed) {
    BernoulliThreshold keep(p);
    Xoshiro256StarStar rng(seed);
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (keep(rng())) b.add_edge(i, j);
    return std::move(b).build();
}

/// Keeps each edge of g (lexicographic order) independently with probability p.
inline Graph random_spanning_subgraph(const Graph& g, const Rational& p, std::uint64_t seed) {
    BernoulliThreshold keep(p);
    Xoshiro256StarStar rng(seed);
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges())
        if (keep(rng())) b.add_edge(u, v);
    return std::move(b).build();
}

} // namespace wturan
