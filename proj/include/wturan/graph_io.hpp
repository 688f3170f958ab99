#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wturan/error.hpp"
#include "wturan/graph.hpp"
#include "wturan/graph6.hpp"

namespace wturan {

// Edge-list text format: "n m" on the first line, then m lines "u v" with
// 0-based indices. Any whitespace separates tokens. Several graphs may be
// concatenated in one stream.

inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

enum class InputFormat { automatic, graph6, edge_list };

inline InputFormat parse_input_format(std::string_view s) {
    if (s == "auto") return InputFormat::automatic;
    if (s == "graph6") return InputFormat::graph6;
    if (s == "edgelist" || s == "edge-list") return InputFormat::edge_list;
    throw InvalidArgument("unknown input format '" + std::string(s) + "'");
}

/// A parsed graph plus the 1-based line on which its record started.
struct InputGraph {
    Graph graph;
    std::size_t line = 0;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<std::size_t> to_index(std::string_view tok) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
    return v;
}

inline bool looks_like_edge_list_header(std::string_view line) {
    auto toks = split_ws(line);
    return toks.size() == 2 && to_index(toks[0]) && to_index(toks[1]);
}

inline bool blank(std::string_view s) { return split_ws(s).empty(); }

} // namespace detail

/// Reads every graph in `in`. Blank lines are skipped in both formats.
inline std::vector<InputGraph> read_graphs(std::istream& in, InputFormat format = InputFormat::automatic) {
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(std::move(l));

    if (format == InputFormat::automatic) {
        format = InputFormat::graph6;
        for (const auto& l : lines) {
            if (detail::blank(l)) continue;
            if (detail::looks_like_edge_list_header(l)) format = InputFormat::edge_list;
            break;
        }
    }

    std::vector<InputGraph> out;
    if (format == InputFormat::graph6) {
        for (std::size_t k = 0; k < lines.size(); ++k) {
            if (detail::blank(lines[k])) continue;
            try {
                out.push_back({parse_graph6(lines[k]), k + 1});
            } catch (const ParseError& e) {
                throw e.with_line(k + 1);
            }
        }
        return out;
    }

    // Edge lists: tokens with their line numbers.
    struct Token {
        std::string_view text;
        std::size_t line;
    };
    std::vector<Token> toks;
    for (std::size_t k = 0; k < lines.size(); ++k)
        for (auto t : detail::split_ws(lines[k])) toks.push_back({t, k + 1});

    std::size_t pos = 0;
    auto next_index = [&](const char* what, std::size_t line_hint) {
        if (pos >= toks.size()) throw ParseError(std::string("edge list: missing ") + what, line_hint);
        const auto& t = toks[pos++];
        auto v = detail::to_index(t.text);
        if (!v) throw ParseError("edge list: expected nonnegative integer for " + std::string(what) + ", got '" +
                                     std::string(t.text) + "'", t.line);
        return *v;
    };
    while (pos < toks.size()) {
        std::size_t header_line = toks[pos].line;
        std::size_t n = next_index("vertex count", header_line);
        std::size_t m = next_index("edge count", header_line);
        GraphBuilder b(n);
        for (std::size_t e = 0; e < m; ++e) {
            std::size_t at = pos < toks.size() ? toks[pos].line : (lines.empty() ? 1 : lines.size());
            std::size_t u = next_index("edge endpoint", at);
            std::size_t v = next_index("edge endpoint", at);
            try {
                b.add_edge(u, v);
            } catch (const InvalidArgument& err) {
                throw ParseError(std::string("edge list: ") + err.what(), at);
            }
        }
        out.push_back({std::move(b).build(), header_line});
    }
    return out;
}

} // namespace wturan
