#ifndef CYCERT_ORACLES_HPP
#define CYCERT_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cycert/errors.hpp"
#include "cycert/graph.hpp"

namespace cycert {

// Exponential-time exact oracles.  Each is guarded by a size cap and raises
// SizeCapExceeded beyond it rather than running forever.

inline constexpr int kDefaultEnumerationCap = 16;   // path/cycle order enumeration
inline constexpr int kDefaultIndependenceCap = 60;  // branch-and-bound alpha

namespace detail {

// Branch-and-bound maximum independent set with greedy clique-cover pruning:
// an independent set meets each clique of a cover at most once, so the cover
// size bounds alpha of the candidate set.
class MisSolver {
public:
    explicit MisSolver(const Graph& g) : g_(g) {}

    std::vector<Vertex> solve() {
        std::vector<Vertex> all(g_.order());
        for (int i = 0; i < g_.order(); ++i) all[i] = i;
        best_.clear();
        cur_.clear();
        expand(all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(std::vector<Vertex> cand) {
        if (cur_.size() > best_.size()) best_ = cur_;
        if (cand.empty()) return;

        // Greedy clique cover; vertices get processed in reverse assignment
        // order so the per-vertex bound is monotone.
        std::vector<int> cls(cand.size(), -1);
        std::vector<std::vector<Vertex>> cliques;
        for (size_t i = 0; i < cand.size(); ++i) {
            Vertex v = cand[i];
            int placed = -1;
            for (size_t c = 0; c < cliques.size(); ++c) {
                bool fits = std::all_of(cliques[c].begin(), cliques[c].end(),
                                        [&](Vertex w) { return g_.adjacent(v, w); });
                if (fits) {
                    placed = static_cast<int>(c);
                    break;
                }
            }
            if (placed < 0) {
                placed = static_cast<int>(cliques.size());
                cliques.emplace_back();
            }
            cliques[placed].push_back(v);
            cls[i] = placed;
        }
        std::vector<size_t> order(cand.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return cls[a] < cls[b]; });

        for (size_t k = order.size(); k-- > 0;) {
            size_t i = order[k];
            Vertex v = cand[i];
            if (cur_.size() + static_cast<size_t>(cls[i]) + 1 <= best_.size()) return;
            std::vector<Vertex> next;
            for (size_t k2 = 0; k2 < k; ++k2) {
                Vertex w = cand[order[k2]];
                if (!g_.adjacent(v, w)) next.push_back(w);
            }
            cur_.push_back(v);
            expand(std::move(next));
            cur_.pop_back();
        }
    }

    const Graph& g_;
    std::vector<Vertex> cur_;
    std::vector<Vertex> best_;
};

}  // namespace detail

inline std::vector<Vertex> max_independent_set(const Graph& g,
                                               int cap = kDefaultIndependenceCap) {
    if (g.order() > cap)
        throw SizeCapExceeded("independence oracle cap " + std::to_string(cap) +
                              " exceeded: n=" + std::to_string(g.order()));
    return detail::MisSolver(g).solve();
}

inline int independence_number(const Graph& g, int cap = kDefaultIndependenceCap) {
    return static_cast<int>(max_independent_set(g, cap).size());
}

// Exact R_G(u,v): the set of orders of all simple uv-paths, by subset DP.
inline std::set<int> all_path_orders(const Graph& g, Vertex u, Vertex v,
                                     int cap = kDefaultEnumerationCap) {
    if (u == v) throw Error("all_path_orders: endpoints must differ");
    const int n = g.order();
    if (n > cap)
        throw SizeCapExceeded("path enumeration cap " + std::to_string(cap) +
                              " exceeded: n=" + std::to_string(n));
    // reach[mask * n + last]: a simple path from u over exactly `mask`
    // ending at `last` exists.
    std::vector<char> reach(static_cast<size_t>(1ULL << n) * n, 0);
    reach[(static_cast<size_t>(1ULL << u)) * n + u] = 1;
    std::set<int> orders;
    for (uint32_t mask = 1; mask < (1U << n); ++mask) {
        if (!(mask & (1U << u))) continue;
        for (int last = 0; last < n; ++last) {
            if (!reach[static_cast<size_t>(mask) * n + last]) continue;
            if (last == v) {
                orders.insert(std::popcount(mask));
                continue;  // path ends at v
            }
            for (Vertex w : g.neighbors(last)) {
                if (mask & (1U << w)) continue;
                reach[(static_cast<size_t>(mask) | (1U << w)) * n + w] = 1;
            }
        }
    }
    return orders;
}

// Exact set of cycle orders in g, by subset DP anchored at each cycle's
// smallest vertex.
inline std::set<int> all_cycle_orders(const Graph& g, int cap = kDefaultEnumerationCap) {
    const int n = g.order();
    if (n > cap)
        throw SizeCapExceeded("cycle enumeration cap " + std::to_string(cap) +
                              " exceeded: n=" + std::to_string(n));
    std::set<int> orders;
    std::vector<char> reach;
    for (int s = 0; s + 2 < n; ++s) {
        reach.assign(static_cast<size_t>(1ULL << (n - s)) * (n - s), 0);
        // relabel: vertex s+i -> i; anchor is 0.
        const int m = n - s;
        reach[(1ULL) * m + 0] = 1;
        for (uint32_t mask = 1; mask < (1U << m); ++mask) {
            if (!(mask & 1U)) continue;
            for (int last = 0; last < m; ++last) {
                if (!reach[static_cast<size_t>(mask) * m + last]) continue;
                if (last != 0 && std::popcount(mask) >= 3 && g.adjacent(s + last, s))
                    orders.insert(std::popcount(mask));
                for (Vertex w : g.neighbors(s + last)) {
                    if (w < s) continue;
                    int wi = w - s;
                    if (wi == 0 || (mask & (1U << wi))) continue;
                    reach[(static_cast<size_t>(mask) | (1U << wi)) * m + wi] = 1;
                }
            }
        }
    }
    return orders;
}

}  // namespace cycert

#endif
