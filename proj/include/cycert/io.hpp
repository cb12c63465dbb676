#ifndef CYCERT_IO_HPP
#define CYCERT_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cycert/errors.hpp"
#include "cycert/graph.hpp"

namespace cycert {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0-based ascending pairs in lexicographic order.

inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

inline Graph read_edge_list(std::istream& is) {
    int n = 0, m = 0;
    if (!(is >> n >> m)) throw ParseError("edge list: bad header");
    if (n < 0 || m < 0) throw ParseError("edge list: negative header values");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(is >> u >> v)) throw ParseError("edge list: truncated at edge " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: vertex out of range in edge " + std::to_string(i));
        if (u == v) throw ParseError("edge list: self-loop");
        if (g.adjacent(u, v)) throw ParseError("edge list: duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

inline Graph graph_from_edge_list(const std::string& text) {
    std::istringstream is(text);
    return read_edge_list(is);
}

// graph6: standard 6-bit ASCII encoding of the upper triangle, column order
// (j from 1 to n-1, i from 0 to j-1).

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw Error("graph6: order too large");
    }
    int bit = 5;
    char cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (n >= 2 && bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

inline Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw ParseError("graph6: truncated");
        int c = static_cast<unsigned char>(s[pos++]) - 63;
        if (c < 0 || c > 63) throw ParseError("graph6: byte out of range");
        return c;
    };
    int n = 0;
    if (s.empty()) throw ParseError("graph6: empty");
    if (static_cast<unsigned char>(s[0]) == 126) {
        ++pos;
        if (pos + 3 > s.size() || static_cast<unsigned char>(s[pos]) == 126)
            throw ParseError("graph6: unsupported order encoding");
        n = (next() << 12) | (next() << 6) | next();
    } else {
        n = next();
    }
    Graph g(n);
    int bit = -1, cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit < 0) {
                cur = next();
                bit = 5;
            }
            if (cur & (1 << bit)) g.add_edge(i, j);
            --bit;
        }
    }
    if (pos != s.size()) throw ParseError("graph6: trailing bytes");
    return g;
}

}  // namespace cycert

#endif
