#ifndef CYCERT_GEN_HPP
#define CYCERT_GEN_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cycert/errors.hpp"
#include "cycert/graph.hpp"
#include "cycert/rng.hpp"
#include "cycert/saw.hpp"

namespace cycert {

// Disjoint cliques of the given sizes plus `cross` random edges between
// different cliques (deduplicated, so the result may have fewer).
inline Graph clique_union_cross(const std::vector<int>& sizes, int cross, uint64_t seed) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw Error("clique_union_cross: sizes must be positive");
        n += s;
    }
    Graph g(n);
    std::vector<int> part(n);
    int base = 0, id = 0;
    for (int s : sizes) {
        for (int u = base; u < base + s; ++u) {
            part[u] = id;
            for (int v = u + 1; v < base + s; ++v) g.add_edge(u, v);
        }
        base += s;
        ++id;
    }
    Rng rng(seed);
    for (int e = 0; e < cross; ++e) {
        // up to n*n proposals per edge; a full bipartite fill ends earlier
        for (int tries = 0; tries < n * n; ++tries) {
            int u = static_cast<int>(rng.below(n));
            int v = static_cast<int>(rng.below(n));
            if (u == v || part[u] == part[v] || g.adjacent(u, v)) continue;
            g.add_edge(u, v);
            break;
        }
    }
    return g;
}

// A saw on vertices 0..2k (vertex i at backbone position i+1), then random
// extra edges from the last two backbone vertices into the rest until both
// reach in-saw degree exactly d.  Extra chords elsewhere are sprinkled with
// `extra` attempts to vary the instances.
inline std::pair<Graph, Saw> saw_tail(int k, int d, uint64_t seed, int extra = 0) {
    if (k < 1) throw Error("saw_tail: k must be >= 1");
    const int n = 2 * k + 1;
    if (d < 3 || d > n - 1) throw Error("saw_tail: need 3 <= d <= 2k");
    Graph g(n);
    std::vector<Vertex> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int t = 1; 2 * t + 1 <= n; ++t) g.add_edge(2 * t - 2, 2 * t);
    Saw s(pos);

    Rng rng(seed);
    auto raise_to = [&](int p, int target) {
        // p is a 1-based backbone position; add random saw chords at v_p
        while (saw_induced_degree(g, s, p) < target) {
            int q = rng.range(1, n);
            if (q == p || g.adjacent(s.at(p), s.at(q))) continue;
            g.add_edge(s.at(p), s.at(q));
        }
    };
    raise_to(n, d);
    raise_to(2 * k, d);
    // raising v_2k can overshoot v_{2k+1}; d(S) is still min of the two
    for (int e = 0; e < extra; ++e) {
        int a = rng.range(1, n), b = rng.range(1, n);
        if (a == b) continue;
        if (s.at(a) == s.at(2 * k) || s.at(a) == s.at(n)) continue;
        if (s.at(b) == s.at(2 * k) || s.at(b) == s.at(n)) continue;
        g.add_edge(s.at(a), s.at(b));
    }
    return {std::move(g), std::move(s)};
}

// Random n-vertex graph that is 2-connected by construction (random
// Hamiltonian cycle) with minimum degree at least delta.
inline Graph two_connected_random(int n, int delta, uint64_t seed) {
    if (n < 3) throw Error("two_connected_random: n must be >= 3");
    if (delta > n - 1) throw Error("two_connected_random: delta too large");
    Rng rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<uint64_t>(i) + 1)]);
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(perm[i], perm[(i + 1) % n]);
    while (g.min_degree() < delta) {
        int u = static_cast<int>(rng.below(n));
        if (g.degree(u) >= delta) continue;
        int v = static_cast<int>(rng.below(n));
        if (u == v || g.adjacent(u, v)) continue;
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace cycert

#endif
