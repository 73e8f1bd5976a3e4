#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int g6_byte(std::string_view s, std::size_t i, const char* what) {
    if (i >= s.size()) throw Graph6Error(std::string("graph6: truncated ") + what);
    unsigned char c = s[i];
    if (c < 63 || c > 126) throw Graph6Error(std::string("graph6: invalid byte in ") + what);
    return c - 63;
}

} // namespace detail

/// Decodes one graph6 string (no trailing newline). Byte-exact per the
/// published format: ≥63-offset printable bytes, column-major upper triangle.
inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("graph6: empty string");
    std::size_t pos = 0;
    long long n = 0;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
            pos = 2;
            for (int k = 0; k < 6; ++k)
                n = (n << 6) | detail::g6_byte(text, pos++, "header");
        } else {
            pos = 1;
            for (int k = 0; k < 3; ++k)
                n = (n << 6) | detail::g6_byte(text, pos++, "header");
        }
    } else {
        n = detail::g6_byte(text, pos++, "header");
    }
    if (n > 20000) throw Graph6Error("graph6: order beyond the supported range");

    Graph g{int(n)};
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (std::ptrdiff_t(text.size()) - std::ptrdiff_t(pos) < nbytes)
        throw Graph6Error("graph6: truncated bit payload");
    if (std::ptrdiff_t(text.size()) - std::ptrdiff_t(pos) > nbytes)
        throw Graph6Error("graph6: trailing garbage");

    long long bit = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit % 6 == 0) cur = detail::g6_byte(text, pos + bit / 6, "payload");
            if ((cur >> (5 - bit % 6)) & 1) g.add_edge(i, j);
            ++bit;
        }
    }
    return g;
}

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw Graph6Error("graph6: order too large to encode");
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(char((acc << (6 - nb)) + 63));
    return out;
}

/// Reads a newline-separated multi-graph file. An optional ">>graph6<<"
/// prefix on a line is skipped.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view sv(line);
        constexpr std::string_view kHeader = ">>graph6<<";
        if (sv.substr(0, kHeader.size()) == kHeader) sv.remove_prefix(kHeader.size());
        if (sv.empty()) continue;
        out.push_back(parse_graph6(sv));
    }
    return out;
}

inline std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Graph6Error("cannot open graph6 file: " + path);
    return read_graph6_lines(in);
}

} // namespace ramsey
