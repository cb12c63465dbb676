#ifndef CYCERT_GRAPH_HPP
#define CYCERT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cycert/errors.hpp"

namespace cycert {

using Vertex = int;

// Undirected simple graph on vertex labels 0..n-1.
//
// "Order" of a path/cycle/graph means vertex count throughout, matching
// the usual extremal-graph convention; it is NOT the edge count.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0), nbrs_(n) {
        if (n < 0) throw Error("negative vertex count");
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph cycle_graph(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
        return g;
    }

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const {
        return u != v && adj_[idx(u, v)] != 0;
    }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("self-loop rejected");
        if (adjacent(u, v)) return;
        adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
        std::sort(nbrs_[u].begin(), nbrs_[u].end());
        std::sort(nbrs_[v].begin(), nbrs_[v].end());
        ++m_;
    }

    // Neighbors in ascending label order.
    const std::vector<Vertex>& neighbors(Vertex u) const {
        check_vertex(u);
        return nbrs_[u];
    }

    int degree(Vertex u) const { return static_cast<int>(neighbors(u).size()); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int u = 1; u < n_; ++u) d = std::min(d, degree(u));
        return d;
    }

    // Edges as ascending (u,v) pairs, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> es;
        es.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (Vertex v : nbrs_[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    // Induced subgraph on `verts` (labels need not be sorted; duplicates
    // rejected).  Vertices are relabeled 0..k-1 in ascending original order;
    // `back_map[i]` is the original label of the new vertex i.
    Graph induced(const std::vector<Vertex>& verts, std::vector<Vertex>* back_map = nullptr) const {
        std::vector<Vertex> vs = verts;
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw Error("induced: duplicate vertex");
        Graph h(static_cast<int>(vs.size()));
        for (size_t i = 0; i < vs.size(); ++i) {
            check_vertex(vs[i]);
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (adjacent(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
        if (back_map) *back_map = vs;
        return h;
    }

    // Subgraph induced on all vertices except `removed`.
    Graph without(const std::vector<Vertex>& removed, std::vector<Vertex>* back_map = nullptr) const {
        std::vector<char> drop(n_, 0);
        for (Vertex v : removed) {
            check_vertex(v);
            drop[v] = 1;
        }
        std::vector<Vertex> keep;
        for (int u = 0; u < n_; ++u)
            if (!drop[u]) keep.push_back(u);
        return induced(keep, back_map);
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    size_t idx(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return static_cast<size_t>(u) * n_ + v;
    }

    void check_vertex(Vertex u) const {
        if (u < 0 || u >= n_) throw Error("vertex label out of range: " + std::to_string(u));
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<uint8_t> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
};

// Simple path given by its vertex sequence; endpoints are front/back.
struct Path {
    std::vector<Vertex> vertices;

    Path() = default;
    explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

    int order() const { return static_cast<int>(vertices.size()); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }

    Path reversed() const {
        Path p = *this;
        std::reverse(p.vertices.begin(), p.vertices.end());
        return p;
    }
};

// Cyclically ordered vertex sequence (closing edge last -> first implied).
struct Cycle {
    std::vector<Vertex> vertices;

    Cycle() = default;
    explicit Cycle(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

    int order() const { return static_cast<int>(vertices.size()); }
};

struct VertexSet {
    std::vector<Vertex> members;  // ascending, distinct

    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> vs) : members(std::move(vs)) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    int size() const { return static_cast<int>(members.size()); }
    bool contains(Vertex v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }
};

namespace detail {
inline bool all_distinct(const std::vector<Vertex>& vs) {
    std::vector<Vertex> s = vs;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}
inline bool all_in_range(const std::vector<Vertex>& vs, int n) {
    return std::all_of(vs.begin(), vs.end(), [n](Vertex v) { return v >= 0 && v < n; });
}
}  // namespace detail

// Reason codes let callers report the first violated condition.
enum class InvalidReason {
    None,
    Empty,
    VertexOutOfRange,
    RepeatedVertex,
    MissingEdge,
    TooShort,
};

inline InvalidReason path_invalid_reason(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return InvalidReason::Empty;
    if (!detail::all_in_range(p.vertices, g.order())) return InvalidReason::VertexOutOfRange;
    if (!detail::all_distinct(p.vertices)) return InvalidReason::RepeatedVertex;
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!g.adjacent(p.vertices[i], p.vertices[i + 1])) return InvalidReason::MissingEdge;
    return InvalidReason::None;
}

inline InvalidReason cycle_invalid_reason(const Graph& g, const Cycle& c) {
    if (c.order() < 3) return InvalidReason::TooShort;
    if (!detail::all_in_range(c.vertices, g.order())) return InvalidReason::VertexOutOfRange;
    if (!detail::all_distinct(c.vertices)) return InvalidReason::RepeatedVertex;
    for (size_t i = 0; i < c.vertices.size(); ++i)
        if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]))
            return InvalidReason::MissingEdge;
    return InvalidReason::None;
}

inline InvalidReason independent_set_invalid_reason(const Graph& g, const VertexSet& s) {
    if (!detail::all_in_range(s.members, g.order())) return InvalidReason::VertexOutOfRange;
    for (size_t i = 0; i < s.members.size(); ++i)
        for (size_t j = i + 1; j < s.members.size(); ++j)
            if (g.adjacent(s.members[i], s.members[j])) return InvalidReason::MissingEdge;
    return InvalidReason::None;
}

inline bool verify_certificate_part(const Graph& g, const Path& p) {
    return path_invalid_reason(g, p) == InvalidReason::None;
}
inline bool verify_certificate_part(const Graph& g, const Cycle& c) {
    return cycle_invalid_reason(g, c) == InvalidReason::None;
}
inline bool verify_certificate_part(const Graph& g, const VertexSet& s) {
    return independent_set_invalid_reason(g, s) == InvalidReason::None;
}

// Relabel a path/cycle through `back_map` (subgraph labels -> host labels).
inline Path map_back(const Path& p, const std::vector<Vertex>& back_map) {
    Path q = p;
    for (Vertex& v : q.vertices) v = back_map[v];
    return q;
}
inline Cycle map_back(const Cycle& c, const std::vector<Vertex>& back_map) {
    Cycle d = c;
    for (Vertex& v : d.vertices) v = back_map[v];
    return d;
}
inline VertexSet map_back(const VertexSet& s, const std::vector<Vertex>& back_map) {
    std::vector<Vertex> m = s.members;
    for (Vertex& v : m) v = back_map[v];
    return VertexSet(std::move(m));
}

}  // namespace cycert

#endif
