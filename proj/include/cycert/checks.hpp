#ifndef CYCERT_CHECKS_HPP
#define CYCERT_CHECKS_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cycert/blocks.hpp"
#include "cycert/chop.hpp"
#include "cycert/eg_paths.hpp"
#include "cycert/errors.hpp"
#include "cycert/gen.hpp"
#include "cycert/graph.hpp"
#include "cycert/oracles.hpp"
#include "cycert/rng.hpp"
#include "cycert/saw.hpp"

namespace cycert {

// Seeded replay harness: each lemma check generates its own instances,
// runs the constructive routine, and validates the output against the
// enumeration oracles.  Everything a routine claims is re-verified here, so
// an implementation producing a wrong path, order, or interval fails the
// check rather than being taken on faith.
struct CheckResult {
    std::string lemma;
    int trials = 0;
    int failures = 0;
    std::string message;  // first failure, for diagnosis

    bool ok() const { return trials > 0 && failures == 0; }

    void fail(const std::string& why) {
        ++failures;
        if (message.empty()) message = why;
    }
};

namespace detail {

inline void check_family_against_oracle(CheckResult& res, const Graph& g,
                                        const OrderFamily& fam, const std::string& what) {
    try {
        fam.validate(g);
    } catch (const Error& e) {
        res.fail(what + ": " + e.what());
        return;
    }
    std::set<int> oracle = all_path_orders(g, fam.u, fam.v);
    for (const auto& [q, p] : fam.paths)
        if (!oracle.count(q)) {
            res.fail(what + ": claimed order " + std::to_string(q) + " not in oracle set");
            return;
        }
}

inline bool family_covers(const OrderFamily& fam, int lo, int hi) {
    for (int q = lo; q <= hi; ++q)
        if (!fam.paths.count(q)) return false;
    return true;
}

}  // namespace detail

inline CheckResult check_chop(int trials, uint64_t seed, int max_n) {
    CheckResult res;
    res.lemma = "chop";
    if (max_n <= 0) max_n = 12;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++res.trials;
        int n = rng.range(4, max_n);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(static_cast<uint64_t>(i) + 1)]);
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(perm[i], perm[i + 1]);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.adjacent(u, v) && rng.below(3) == 0) g.add_edge(u, v);
        Path path(perm);
        int alpha = independence_number(g);
        ReductionLadder ladder;
        try {
            ladder = chop(g, path, alpha);
        } catch (const Error& e) {
            res.fail(std::string("chop threw: ") + e.what());
            continue;
        }
        std::set<int> orders;
        bool bad = false;
        int prev = n + 1;
        for (const auto& step : ladder.steps) {
            if (path_invalid_reason(g, step) != InvalidReason::None ||
                step.front() != path.front() || step.back() != path.back()) {
                res.fail("invalid ladder step");
                bad = true;
                break;
            }
            if (step.order() >= prev) {
                res.fail("ladder orders not strictly decreasing");
                bad = true;
                break;
            }
            prev = step.order();
            orders.insert(step.order());
        }
        if (bad) continue;
        if (ladder.steps.back().order() > 2 * alpha) {
            res.fail("ladder bottom above 2*alpha");
            continue;
        }
        for (int a = 1; a + 2 * alpha - 1 <= n; ++a) {
            auto it = orders.lower_bound(a);
            if (it == orders.end() || *it > a + 2 * alpha - 1) {
                res.fail("window [" + std::to_string(a) + "," +
                         std::to_string(a + 2 * alpha - 1) + "] missed");
                bad = true;
                break;
            }
        }
        if (bad) continue;
        // undershooting the bound must either still work or yield a
        // verified oversized independent set
        if (alpha >= 2) {
            try {
                chop(g, path, alpha - 1);
            } catch (const NoChord& e) {
                VertexSet is(e.independent_set);
                if (is.size() != alpha ||
                    independent_set_invalid_reason(g, is) != InvalidReason::None)
                    res.fail("NoChord witness invalid");
            }
        }
    }
    return res;
}

inline CheckResult check_collate(int trials, uint64_t seed, int max_n) {
    CheckResult res;
    res.lemma = "collate";
    if (max_n <= 0) max_n = 14;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++res.trials;
        int n1 = rng.range(4, std::min(7, max_n - 4));
        int n2 = rng.range(4, std::min(7, max_n - n1));
        Graph g(n1 + n2);
        for (int u = 0; u < n1; ++u)
            for (int v = u + 1; v < n1; ++v) g.add_edge(u, v);
        for (int u = n1; u < n1 + n2; ++u)
            for (int v = u + 1; v < n1 + n2; ++v) g.add_edge(u, v);
        Vertex x1 = 0, y1 = 1, x2 = n1, y2 = n1 + 1;
        g.add_edge(x1, x2);
        g.add_edge(y1, y2);

        auto clique_path = [](Vertex a, Vertex b, int base, int q) {
            std::vector<Vertex> vs{a};
            for (int w = base; static_cast<int>(vs.size()) < q - 1; ++w)
                if (w != a && w != b) vs.push_back(w);
            vs.push_back(b);
            return Path(vs);
        };
        OrderFamily fam1;
        fam1.u = x1;
        fam1.v = y1;
        for (int q = 2; q <= n1; ++q) fam1.insert(clique_path(x1, y1, 2, q));
        int k = rng.range(2, std::min(4, n1 - 1));
        OrderFamily fam2;
        fam2.u = x2;
        fam2.v = y2;
        int l2 = 2;
        for (int q = 2; q <= n2; q += k) {
            fam2.insert(clique_path(x2, y2, n1 + 2, q));
            l2 = q;
        }
        std::vector<Vertex> side1(n1), side2(n2);
        std::iota(side1.begin(), side1.end(), 0);
        std::iota(side2.begin(), side2.end(), n1);
        VertexSet v1(side1), v2(side2);
        int a = 2, b = n1, l1 = 2;
        bool bad = false;
        for (int s = a + l1 + k; s <= b + l2; ++s) {
            try {
                Cycle c = collate(g, v1, v2, {x1, x2}, {y1, y2}, fam1, fam2, k, a, b, l1, l2, s);
                if (c.order() != s || cycle_invalid_reason(g, c) != InvalidReason::None) {
                    res.fail("collate produced wrong cycle at s=" + std::to_string(s));
                    bad = true;
                    break;
                }
            } catch (const Error& e) {
                res.fail("collate failed at s=" + std::to_string(s) + ": " + e.what());
                bad = true;
                break;
            }
        }
        if (bad) continue;
        for (int s : {a + l1 + k - 1, b + l2 + 1}) {
            try {
                collate(g, v1, v2, {x1, x2}, {y1, y2}, fam1, fam2, k, a, b, l1, l2, s);
                res.fail("collate accepted out-of-range s=" + std::to_string(s));
            } catch (const OutOfRange&) {
            }
        }
    }
    return res;
}

inline CheckResult check_erdos_gallai(int trials, uint64_t seed, int max_n) {
    CheckResult res;
    res.lemma = "erdos_gallai";
    if (max_n <= 0) max_n = 11;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++res.trials;
        int n = rng.range(5, max_n);
        int delta = rng.range(2, std::max(2, n / 2));
        Graph g = two_connected_random(n, delta, rng.next());
        delta = g.min_degree();
        bool bad = false;
        for (Vertex u = 0; u < n && !bad; ++u)
            for (Vertex v = u + 1; v < n && !bad; ++v) {
                Path p;
                try {
                    p = path_at_least(g, u, v, delta);
                } catch (const Error& e) {
                    res.fail(std::string("path_at_least threw: ") + e.what());
                    bad = true;
                    break;
                }
                if (path_invalid_reason(g, p) != InvalidReason::None || p.front() != u ||
                    p.back() != v || p.order() < delta + 1) {
                    res.fail("path_at_least result violates guarantee");
                    bad = true;
                    break;
                }
                if (!all_path_orders(g, u, v).count(p.order())) {
                    res.fail("path_at_least order not in oracle set");
                    bad = true;
                }
            }
    }

    // split instances: path confined to one side of a 2-cut
    int structured = std::max(1, trials / 3);
    for (int t = 0; t < structured; ++t) {
        ++res.trials;
        int na = rng.range(4, 6), nb = rng.range(4, 6);
        Graph g(2 + na + nb);
        Vertex u = 0, v = 1;
        for (int i = 0; i < na; ++i)
            for (int j = i + 1; j < na; ++j) g.add_edge(2 + i, 2 + j);
        for (int i = 0; i < nb; ++i)
            for (int j = i + 1; j < nb; ++j) g.add_edge(2 + na + i, 2 + na + j);
        for (int i = 0; i < na; ++i) {
            g.add_edge(u, 2 + i);
            g.add_edge(v, 2 + i);
        }
        for (int i = 0; i < nb; ++i) {
            g.add_edge(u, 2 + na + i);
            g.add_edge(v, 2 + na + i);
        }
        std::vector<Vertex> bside(nb);
        std::iota(bside.begin(), bside.end(), 2 + na);
        int delta = std::min(na, nb) + 1;
        try {
            Path p = path_avoiding(g, u, v, VertexSet(bside), delta);
            bool touches = false;
            for (Vertex w : p.vertices)
                if (w >= 2 + na) touches = true;
            if (touches || p.order() < delta + 1 ||
                path_invalid_reason(g, p) != InvalidReason::None)
                res.fail("path_avoiding violates guarantee");
        } catch (const Error& e) {
            res.fail(std::string("path_avoiding threw: ") + e.what());
        }
    }

    // one low-degree exception vertex
    for (int t = 0; t < structured; ++t) {
        ++res.trials;
        int n = rng.range(5, std::max(5, max_n - 1));
        int delta = rng.range(2, std::max(2, n / 2));
        Graph base = two_connected_random(n, delta, rng.next());
        delta = base.min_degree();
        Graph g(n + 1);
        for (auto [a, b] : base.edges()) g.add_edge(a, b);
        Vertex x = n;
        int attach = rng.range(2, std::max(2, delta - 1));
        while (g.degree(x) < attach) g.add_edge(x, static_cast<int>(rng.below(n)));
        Vertex u = static_cast<int>(rng.below(n));
        Vertex v = static_cast<int>(rng.below(n));
        if (u == v) v = (v + 1) % n;
        try {
            Path p = path_one_exception(g, x, u, v, delta);
            if (p.order() < delta + 1 || p.front() != u || p.back() != v ||
                path_invalid_reason(g, p) != InvalidReason::None)
                res.fail("path_one_exception violates guarantee");
            else if (!all_path_orders(g, u, v).count(p.order()))
                res.fail("path_one_exception order not in oracle set");
        } catch (const Error& e) {
            res.fail(std::string("path_one_exception threw: ") + e.what());
        }
    }
    return res;
}

inline CheckResult check_saw_find(int trials, uint64_t seed, int max_n) {
    CheckResult res;
    res.lemma = "saw_find";
    if (max_n <= 0) max_n = 30;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++res.trials;
        int r = rng.range(1, 2);
        int p = rng.range(4, 8);
        std::vector<int> sizes;
        for (int i = 0; i < r; ++i) sizes.push_back(rng.range(p + 1, std::min(p + 3, max_n / r)));
        Graph g = clique_union_cross(sizes, rng.range(0, 10), rng.next());
        try {
            Saw s = find_saw(g, p, r);
            if (saw_invalid_reason(g, s) != InvalidReason::None)
                res.fail("find_saw returned a non-saw");
            else if (saw_degree(g, s) < p - r)
                res.fail("find_saw degree below p-r: " + std::to_string(saw_degree(g, s)));
        } catch (const Error& e) {
            res.fail(std::string("find_saw threw: ") + e.what());
        }
    }
    return res;
}

namespace detail {
inline std::pair<Graph, Saw> dense_saw(Rng& rng, int kmin, int kmax, int dmin_frac_num) {
    int k = rng.range(kmin, kmax);
    int n = 2 * k + 1;
    int dlo = std::max(3, (dmin_frac_num * n + 2) / 3);
    if (dmin_frac_num == 0) dlo = 3;
    int d = rng.range(std::min(dlo, 2 * k), 2 * k);
    return saw_tail(k, d, rng.next(), rng.range(0, 2 * k));
}
}  // namespace detail

inline CheckResult check_pr1(int trials, uint64_t seed, int max_n) {
    CheckResult res;
    res.lemma = "pr1";
    (void)max_n;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++res.trials;
        auto [g, s] = detail::dense_saw(rng, 3, 6, 0);
        int n = s.n();
        int a = rng.range(1, n);
        int len = rng.range(2, n - 1);
        int b = ((a - 1 + len - 1) % n) + 1;
        OrderFamily fam;
        try {
            fam = backbone_path_family(g, s, a, b);
        } catch (const Error& e) {
            res.fail(std::string("backbone family threw: ") + e.what());
            continue;
        }
        detail::check_family_against_oracle(res, g, fam, "pr1");
        bool wrap = a + len - 1 > n;
        int lo = wrap ? len / 2 + 2 : (len + 1) / 2 + 1;
        if (!detail::family_covers(fam, lo, len))
            res.fail("pr1 coverage gap in [" + std::to_string(lo) + "," + std::to_string(len) +
                     "]");
    }
    return res;
}

inline CheckResult check_super(int trials, uint64_t seed, int max_n) {
    CheckResult res;
    res.lemma = "super";
    (void)max_n;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++res.trials;
        auto [g, s] = detail::dense_saw(rng, 3, 6, 2);  // d >= 2n/3
        OrderFamily fam;
        try {
            fam = endpair_paths(g, s);
        } catch (const Error& e) {
            res.fail(std::string("endpair_paths threw: ") + e.what());
            continue;
        }
        detail::check_family_against_oracle(res, g, fam, "super");
        if (!detail::family_covers(fam, 2, s.n())) res.fail("super coverage gap in [2,n]");
    }
    return res;
}

inline CheckResult check_lux(int trials, uint64_t seed, int max_n) {
    CheckResult res;
    res.lemma = "lux";
    (void)max_n;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++res.trials;
        auto [g, s] = detail::dense_saw(rng, 3, 6, 2);
        int n = s.n();
        int k = s.k();
        int d = saw_degree(g, s);
        int j = rng.range(1, n);
        OrderFamily fam;
        try {
            fam = consecutive_pair_paths(g, s, j);
        } catch (const Error& e) {
            res.fail(std::string("consecutive_pair_paths threw: ") + e.what());
            continue;
        }
        detail::check_family_against_oracle(res, g, fam, "lux");
        int lo = std::max(2, 2 * k - d + 6);
        if (!detail::family_covers(fam, lo, n))
            res.fail("lux coverage gap in [" + std::to_string(lo) + "," + std::to_string(n) +
                     "] at j=" + std::to_string(j));
    }
    return res;
}

inline CheckResult check_flat(int trials, uint64_t seed, int max_n) {
    CheckResult res;
    res.lemma = "flat";
    (void)max_n;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++res.trials;
        int k = rng.range(3, 6);
        int n = 2 * k + 1;
        int d = rng.range(std::max({3, k, (2 * n + 2) / 3}), 2 * k);
        auto [g, s] = saw_tail(k, d, rng.next(), rng.range(0, 2 * k));
        d = saw_degree(g, s);
        int pi = rng.range(1, n), pj = rng.range(1, n);
        if (pi == pj) pj = pi % n + 1;
        OrderFamily fam;
        try {
            fam = any_pair_paths(g, s, pi, pj);
        } catch (const Error& e) {
            res.fail(std::string("any_pair_paths threw: ") + e.what());
            continue;
        }
        detail::check_family_against_oracle(res, g, fam, "flat");
        if (fam.paths.empty()) {
            res.fail("flat produced no paths");
            continue;
        }
        int l = fam.paths.rbegin()->first;
        int lo = std::max(2, l - (d + 1) / 2 + 5);
        if (!detail::family_covers(fam, lo, l))
            res.fail("flat coverage gap in [" + std::to_string(lo) + "," + std::to_string(l) +
                     "] pair (" + std::to_string(pi) + "," + std::to_string(pj) + ")");
    }
    return res;
}

inline CheckResult check_saw_cycles(int trials, uint64_t seed, int max_n) {
    CheckResult res;
    res.lemma = "saw_cycles";
    (void)max_n;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++res.trials;
        int k = rng.range(4, 6);
        int n = 2 * k + 1;
        auto [g, s] = saw_tail(k, rng.range(3, 2 * k), rng.next(), rng.range(0, 3 * k));
        // densify away from the last two backbone vertices until the
        // independence number fits the lemma hypothesis
        std::vector<std::pair<int, int>> free_pairs;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (i == 2 * k || i == n || j == 2 * k || j == n) continue;
                if (!g.adjacent(s.at(i), s.at(j))) free_pairs.push_back({i, j});
            }
        for (int i = static_cast<int>(free_pairs.size()) - 1; i > 0; --i)
            std::swap(free_pairs[i], free_pairs[rng.below(static_cast<uint64_t>(i) + 1)]);
        int r = independence_number(g);
        for (const auto& [i, j] : free_pairs) {
            if (2 * r <= k) break;
            g.add_edge(s.at(i), s.at(j));
            r = independence_number(g);
        }
        if (2 * r > k) {
            res.fail("could not densify instance to 2r <= k");
            continue;
        }
        std::set<int> oracle = all_cycle_orders(g);
        for (int q = 4 * r; q <= n; ++q) {
            try {
                Cycle c = saw_cycle(g, s, r, q);
                if (c.order() != q || cycle_invalid_reason(g, c) != InvalidReason::None) {
                    res.fail("saw_cycle wrong cycle at q=" + std::to_string(q));
                    break;
                }
                if (!oracle.count(q)) {
                    res.fail("saw_cycle order not in oracle set at q=" + std::to_string(q));
                    break;
                }
            } catch (const Error& e) {
                res.fail("saw_cycle threw at q=" + std::to_string(q) + ": " + e.what());
                break;
            }
        }
    }
    return res;
}

inline std::vector<std::string> lemma_names() {
    return {"chop", "collate", "erdos_gallai", "saw_find", "pr1",
            "super", "lux", "flat", "saw_cycles"};
}

inline CheckResult run_lemma_check(const std::string& lemma, int trials, uint64_t seed,
                                   int max_n) {
    if (trials <= 0) trials = 50;
    if (lemma == "chop") return check_chop(trials, seed, max_n);
    if (lemma == "collate") return check_collate(trials, seed, max_n);
    if (lemma == "erdos_gallai") return check_erdos_gallai(trials, seed, max_n);
    if (lemma == "saw_find") return check_saw_find(trials, seed, max_n);
    if (lemma == "pr1") return check_pr1(trials, seed, max_n);
    if (lemma == "super") return check_super(trials, seed, max_n);
    if (lemma == "lux") return check_lux(trials, seed, max_n);
    if (lemma == "flat") return check_flat(trials, seed, max_n);
    if (lemma == "saw_cycles") return check_saw_cycles(trials, seed, max_n);
    throw ParseError("unknown lemma: " + lemma);
}

}  // namespace cycert

#endif
