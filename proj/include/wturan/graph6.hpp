#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "wturan/error.hpp"
#include "wturan/graph.hpp"

namespace wturan {

// graph6 as defined by McKay (formats.txt, nauty distribution):
//   N(n) header, then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
//   (column by column) packed big-endian into 6-bit groups, each group + 63.

inline constexpr std::uint64_t graph6_max_order = 68719476735ULL;  // 2^36 - 1

namespace detail {

inline void append_graph6_size(std::string& out, std::uint64_t n) {
    auto put = [&](int groups) {
        for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63U)));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        put(3);
    } else {
        out.append("~~");
        put(6);
    }
}

} // namespace detail

inline std::string write_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    if (n > graph6_max_order) throw InvalidArgument("graph too large for graph6");
    std::string out;
    detail::append_graph6_size(out, n);
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

/// Parses one graph6 line. An optional ">>graph6<<" prefix and trailing
/// CR/LF are accepted. Non-minimal size headers are accepted.
inline Graph parse_graph6(std::string_view line) {
    constexpr std::string_view magic = ">>graph6<<";
    if (line.starts_with(magic)) line.remove_prefix(magic.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: empty line");
    for (std::size_t k = 0; k < line.size(); ++k) {
        auto c = static_cast<unsigned char>(line[k]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: character " + std::to_string(c) + " at offset " + std::to_string(k) +
                             " outside 63..126");
    }

    auto six = [&](std::size_t k) { return static_cast<std::uint64_t>(static_cast<unsigned char>(line[k]) - 63); };
    std::uint64_t n = 0;
    std::size_t pos = 0;
    auto read_groups = [&](std::size_t start, int groups) {
        if (line.size() < start + groups) throw ParseError("graph6: truncated size header");
        std::uint64_t v = 0;
        for (int k = 0; k < groups; ++k) v = (v << 6) | six(start + k);
        pos = start + groups;
        return v;
    };
    if (line[0] != '~') {
        n = six(0);
        pos = 1;
    } else if (line.size() >= 2 && line[1] == '~') {
        n = read_groups(2, 6);
    } else {
        n = read_groups(1, 3);
    }

    const unsigned __int128 bits = static_cast<unsigned __int128>(n) * (n == 0 ? 0 : n - 1) / 2;
    const unsigned __int128 want = (bits + 5) / 6;
    if (want != line.size() - pos)
        throw ParseError("graph6: expected " + std::to_string(static_cast<std::uint64_t>(want)) +
                         " data bytes for n=" + std::to_string(n) + ", found " + std::to_string(line.size() - pos));

    GraphBuilder b(static_cast<std::size_t>(n));
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            if ((six(pos + k / 6) >> (5 - k % 6)) & 1U) b.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        auto pad = six(pos + k / 6) & ((1U << (6 - k % 6)) - 1);
        if (pad != 0) throw ParseError("graph6: nonzero padding bits");
    }
    return std::move(b).build();
}

} // namespace wturan
