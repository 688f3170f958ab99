#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wturan/error.hpp"
#include "wturan/graph.hpp"
#include "wturan/vertex_set.hpp"

namespace wturan {

/// Sorted list of pairwise-adjacent vertices. Ordering is lexicographic on
/// the vertex list.
struct CliqueSet {
    std::vector<Vertex> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    bool contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

    friend bool operator==(const CliqueSet&, const CliqueSet&) = default;
    friend auto operator<=>(const CliqueSet& a, const CliqueSet& b) { return a.vertices <=> b.vertices; }
};

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (vs[a] == vs[b] || !g.adjacent(vs[a], vs[b])) return false;
    return true;
}

namespace detail {

// Exact maximum clique by branch and bound: vertices of the candidate set
// are greedily colored, and a branch is cut once |current| + color bound
// cannot beat the incumbent (Tomita-Seki MCQ ordering on bitsets).
class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

    std::vector<Vertex> run(VertexSet candidates) {
        best_.clear();
        current_.clear();
        if (!candidates.empty()) expand(std::move(candidates));
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(VertexSet p) {
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        color_sort(p, order, bound);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current_.size() + bound[k] <= best_.size()) return;
            Vertex v = order[k];
            current_.push_back(v);
            VertexSet next = p;
            next &= g_.row(v);
            if (next.empty()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            p.reset(v);
        }
    }

    void color_sort(const VertexSet& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
        VertexSet uncolored = p;
        std::size_t color = 0;
        while (!uncolored.empty()) {
            ++color;
            VertexSet q = uncolored;
            for (Vertex v = q.first(); v < q.capacity(); v = q.next(v + 1)) {
                uncolored.reset(v);
                q.subtract(g_.row(v));
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    const Graph& g_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

} // namespace detail

/// A maximum clique inside `candidates`. Deterministic, but not necessarily
/// the lexicographically least one.
inline CliqueSet maximum_clique_within(const Graph& g, const VertexSet& candidates) {
    return {detail::MaxCliqueSearch(g).run(candidates)};
}

inline CliqueSet maximum_clique(const Graph& g) { return maximum_clique_within(g, g.all_vertices()); }

/// Clique number ω(g); 0 for the graph with no vertices.
inline std::size_t max_clique_size(const Graph& g) { return maximum_clique(g).size(); }

/// Size of the largest clique containing edge {u, v}: 2 plus the clique
/// number of the common neighbourhood.
inline std::size_t edge_clique_number(const Graph& g, Vertex u, Vertex v) {
    if (u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v))
        throw InvalidArgument("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    VertexSet common = g.neighbors(u);
    common &= g.row(v);
    return 2 + maximum_clique_within(g, common).size();
}

/// Calls `visit(const std::vector<Vertex>&)` on every nonempty clique exactly
/// once, in lexicographic order of the sorted vertex lists.
template <class Visitor>
void for_each_clique(const Graph& g, Visitor&& visit) {
    std::vector<Vertex> current;
    std::function<void(const VertexSet&)> extend = [&](const VertexSet& cand) {
        for (Vertex v = cand.first(); v < cand.capacity(); v = cand.next(v + 1)) {
            current.push_back(v);
            visit(std::as_const(current));
            VertexSet next = cand;
            next &= g.row(v);
            next.clear_below(v + 1);
            if (!next.empty()) extend(next);
            current.pop_back();
        }
    };
    extend(g.all_vertices());
}

inline std::vector<CliqueSet> enumerate_cliques(const Graph& g) {
    std::vector<CliqueSet> out;
    for_each_clique(g, [&](const std::vector<Vertex>& c) { out.push_back({c}); });
    return out;
}

/// Inclusion-maximal cliques (Bron-Kerbosch with Tomita pivoting), sorted
/// lexicographically. The graph with no vertices has none.
inline std::vector<CliqueSet> maximal_cliques(const Graph& g) {
    std::vector<CliqueSet> out;
    std::vector<Vertex> r;
    std::function<void(VertexSet, VertexSet)> bk = [&](VertexSet p, VertexSet x) {
        if (p.empty()) {
            if (x.empty()) {
                auto c = r;
                std::sort(c.begin(), c.end());
                out.push_back({std::move(c)});
            }
            return;
        }
        // pivot: vertex of P ∪ X with the most neighbours in P
        Vertex pivot = p.first();
        std::size_t best = 0;
        for (const VertexSet* s : {&p, &x}) {
            for (Vertex u = s->first(); u < s->capacity(); u = s->next(u + 1)) {
                VertexSet t = p;
                t &= g.row(u);
                if (auto c = t.count(); c > best || (c == best && u < pivot)) {
                    best = c;
                    pivot = u;
                }
            }
        }
        VertexSet branch = p;
        branch.subtract(g.row(pivot));
        for (Vertex v = branch.first(); v < branch.capacity(); v = branch.next(v + 1)) {
            r.push_back(v);
            VertexSet np = p, nx = x;
            np &= g.row(v);
            nx &= g.row(v);
            bk(std::move(np), std::move(nx));
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    };
    if (g.order() > 0) bk(g.all_vertices(), VertexSet(g.order()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wturan
