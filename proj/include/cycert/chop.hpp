#ifndef CYCERT_CHOP_HPP
#define CYCERT_CHOP_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cycert/errors.hpp"
#include "cycert/graph.hpp"

namespace cycert {

// Sequence P_0 > P_1 > ... > P_s of reductions of a path, produced by
// repeatedly shortcutting a chord found among the first 2*alpha+1 vertices.
// Step orders strictly decrease with gaps at most 2*alpha, and the last
// step has order <= 2*alpha; hence every width-2*alpha window inside
// [order(P_0)] contains the order of some step.
struct ReductionLadder {
    std::vector<Path> steps;
    int alpha = 0;

    std::vector<int> orders() const {
        std::vector<int> os;
        os.reserve(steps.size());
        for (const auto& p : steps) os.push_back(p.order());
        return os;
    }
};

inline ReductionLadder chop(const Graph& g, const Path& p, int alpha) {
    if (alpha < 1) throw Error("chop: alpha must be >= 1");
    if (path_invalid_reason(g, p) != InvalidReason::None) throw Error("chop: invalid path");
    ReductionLadder ladder;
    ladder.alpha = alpha;
    ladder.steps.push_back(p);
    while (ladder.steps.back().order() >= 2 * alpha + 1) {
        const auto& vs = ladder.steps.back().vertices;
        const int prefix = 2 * alpha + 1;
        // Chord minimizing the cut-out span (densest ladder); ties broken
        // lexicographically on (i, j).
        int bi = -1, bj = -1;
        for (int span = 2; span < prefix && bi < 0; ++span)
            for (int i = 0; i + span < prefix; ++i)
                if (g.adjacent(vs[i], vs[i + span])) {
                    bi = i;
                    bj = i + span;
                    break;
                }
        if (bi < 0) {
            // Chordless prefix: every other vertex is an independent set of
            // size alpha+1, disproving the supplied bound.
            std::vector<Vertex> is;
            for (int i = 0; i < prefix; i += 2) is.push_back(vs[i]);
            throw NoChord("chop: alpha=" + std::to_string(alpha) +
                              " is not an independence bound for the path",
                          std::move(is));
        }
        std::vector<Vertex> next(vs.begin(), vs.begin() + bi + 1);
        next.insert(next.end(), vs.begin() + bj, vs.end());
        ladder.steps.push_back(Path(std::move(next)));
    }
    return ladder;
}

inline const Path& reduction_in_interval(const ReductionLadder& ladder, int lo, int hi) {
    if (lo < 1 || hi < lo) throw Error("reduction_in_interval: bad interval");
    for (const auto& step : ladder.steps)
        if (lo <= step.order() && step.order() <= hi) return step;
    throw NotCovered("reduction_in_interval: no step in [" + std::to_string(lo) + "," +
                     std::to_string(hi) + "]");
}

// Constructive window into R_G(u,v): one concrete uv-path per achieved order.
struct OrderFamily {
    Vertex u = -1, v = -1;
    std::map<int, Path> paths;

    void insert(const Path& p) {
        // Keep the first (deterministically produced) witness per order.
        paths.emplace(p.order(), p);
    }

    bool covers_interval(int a, int b) const {
        for (int q = a; q <= b; ++q)
            if (!paths.count(q)) return false;
        return true;
    }

    bool hits_every_window(int lo, int hi, int width) const {
        for (int a = lo; a + width - 1 <= hi; ++a) {
            bool hit = false;
            for (int q = a; q < a + width; ++q)
                if (paths.count(q)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    }

    // Largest a such that [a, b] is fully covered; b must be covered.
    int covered_run_start(int b) const {
        if (!paths.count(b)) throw Error("covered_run_start: top order missing");
        int a = b;
        while (a > 1 && paths.count(a - 1)) --a;
        return a;
    }

    void validate(const Graph& g) const {
        for (const auto& [q, p] : paths) {
            if (p.order() != q) throw BadFamily("family: key/order mismatch");
            if (path_invalid_reason(g, p) != InvalidReason::None)
                throw BadFamily("family: invalid path at order " + std::to_string(q));
            if (!((p.front() == u && p.back() == v) || (p.front() == v && p.back() == u)))
                throw BadFamily("family: wrong endpoints at order " + std::to_string(q));
        }
    }
};

inline OrderFamily family_from_ladder(const ReductionLadder& ladder) {
    OrderFamily fam;
    if (ladder.steps.empty()) return fam;
    fam.u = ladder.steps.front().front();
    fam.v = ladder.steps.front().back();
    for (const auto& p : ladder.steps) fam.insert(p);
    return fam;
}

namespace detail {

// Core splice: one fam1 path of order q and one fam2 path of order s-q,
// joined by the two crossing edges, giving a cycle of order exactly s.
inline Cycle splice_cycle(const Graph& g, Vertex x1, Vertex y1, Vertex x2, Vertex y2,
                          const OrderFamily& fam1, const OrderFamily& fam2, int a, int b,
                          int s) {
    for (const auto& [s2, p2] : fam2.paths) {
        int q = s - s2;
        if (q < a || q > b) continue;
        auto it = fam1.paths.find(q);
        if (it == fam1.paths.end()) continue;
        Path p1 = it->second;  // orient x1 -> y1
        if (p1.front() != x1) p1 = p1.reversed();
        Path q2 = p2;  // orient y2 -> x2
        if (q2.front() != y2) q2 = q2.reversed();
        std::vector<Vertex> cyc = p1.vertices;
        cyc.insert(cyc.end(), q2.vertices.begin(), q2.vertices.end());
        Cycle c(std::move(cyc));
        if (cycle_invalid_reason(g, c) != InvalidReason::None)
            throw BadFamily("collate: spliced cycle invalid");
        return c;
    }
    throw NotCovered("collate: no compatible pair of family orders for s=" + std::to_string(s));
}

}  // namespace detail

// Collating: fam1 covers the full interval [a,b] of x1-y1 orders inside
// g[v1]; fam2 hits every width-k window of [l1,l2] for x2-y2 inside g[v2];
// (x1,x2), (y1,y2) are disjoint edges across the partition.  Yields a cycle
// of any order s in [a+l1+k, b+l2].
inline Cycle collate(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                     std::pair<Vertex, Vertex> x_edge, std::pair<Vertex, Vertex> y_edge,
                     const OrderFamily& fam1, const OrderFamily& fam2, int k, int a, int b,
                     int l1, int l2, int s) {
    auto [x1, x2] = x_edge;
    auto [y1, y2] = y_edge;
    if (b - a < k - 1) throw Error("collate: condition (i) fails: b-a < k-1");
    if (!g.adjacent(x1, x2) || !g.adjacent(y1, y2))
        throw Error("collate: crossing pairs are not edges");
    if (x1 == y1 || x2 == y2 || x1 == y2 || x2 == y1)
        throw Error("collate: crossing edges are not disjoint");
    if (!v1.contains(x1) || !v1.contains(y1) || !v2.contains(x2) || !v2.contains(y2))
        throw Error("collate: crossing edge endpoints on wrong side");
    fam1.validate(g);
    fam2.validate(g);
    for (const auto& [q, p] : fam1.paths)
        for (Vertex w : p.vertices)
            if (!v1.contains(w)) throw BadFamily("collate: fam1 path leaves v1");
    for (const auto& [q, p] : fam2.paths)
        for (Vertex w : p.vertices)
            if (!v2.contains(w)) throw BadFamily("collate: fam2 path leaves v2");
    if (!fam1.covers_interval(a, b)) throw BadFamily("collate: fam1 does not cover [a,b]");
    if (!fam2.hits_every_window(l1, l2, k))
        throw BadFamily("collate: fam2 misses a width-k window of [l1,l2]");
    if (s < a + l1 + k || s > b + l2)
        throw OutOfRange("collate: s=" + std::to_string(s) + " outside [" +
                         std::to_string(a + l1 + k) + "," + std::to_string(b + l2) + "]");
    return detail::splice_cycle(g, x1, y1, x2, y2, fam1, fam2, a, b, s);
}

}  // namespace cycert

#endif
