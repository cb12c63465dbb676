#ifndef CYCERT_SAW_HPP
#define CYCERT_SAW_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "cycert/chop.hpp"
#include "cycert/errors.hpp"
#include "cycert/graph.hpp"
#include "cycert/io.hpp"

namespace cycert {

// A saw on 2k+1 host vertices: backbone cycle (v_1,...,v_{2k+1},v_1) plus
// the chords (v_{2s-1}, v_{2s+1}) for s in [k].  `pos[i]` is the host vertex
// at 1-based backbone position i+1; position arithmetic lives here so every
// caller indexes the same way.
struct Saw {
    std::vector<Vertex> pos;

    Saw() = default;
    explicit Saw(std::vector<Vertex> p) : pos(std::move(p)) {}

    int n() const { return static_cast<int>(pos.size()); }
    int k() const { return (n() - 1) / 2; }

    // Host vertex at 1-based cyclic position i.
    Vertex at(int i) const {
        const int nn = n();
        int m = ((i - 1) % nn + nn) % nn;
        return pos[m];
    }

    // 1-based position of a host vertex, or 0 if absent.
    int position_of(Vertex v) const {
        for (int i = 0; i < n(); ++i)
            if (pos[i] == v) return i + 1;
        return 0;
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> vs = pos;
        std::sort(vs.begin(), vs.end());
        return vs;
    }
};

inline InvalidReason saw_invalid_reason(const Graph& g, const Saw& s) {
    const int n = s.n();
    if (n < 3 || n % 2 == 0) return InvalidReason::TooShort;
    if (!detail::all_in_range(s.pos, g.order())) return InvalidReason::VertexOutOfRange;
    if (!detail::all_distinct(s.pos)) return InvalidReason::RepeatedVertex;
    for (int i = 1; i <= n; ++i)
        if (!g.adjacent(s.at(i), s.at(i + 1))) return InvalidReason::MissingEdge;
    for (int t = 1; 2 * t + 1 <= n; ++t)
        if (!g.adjacent(s.at(2 * t - 1), s.at(2 * t + 1))) return InvalidReason::MissingEdge;
    return InvalidReason::None;
}

// Degree of v_i counting only neighbors inside the saw.
inline int saw_induced_degree(const Graph& g, const Saw& s, int i) {
    int d = 0;
    Vertex u = s.at(i);
    for (Vertex w : s.pos)
        if (g.adjacent(u, w)) ++d;
    return d;
}

// d(S) = min over the last two backbone positions.
inline int saw_degree(const Graph& g, const Saw& s) {
    return std::min(saw_induced_degree(g, s, 2 * s.k()), saw_induced_degree(g, s, s.n()));
}

// Serialization: edge list of the host graph, then one line listing the
// backbone host vertices in position order.
inline void write_saw(std::ostream& os, const Graph& g, const Saw& s) {
    write_edge_list(os, g);
    for (int i = 0; i < s.n(); ++i) os << (i ? " " : "") << s.pos[i];
    os << '\n';
}

inline std::pair<Graph, Saw> read_saw(std::istream& is) {
    Graph g = read_edge_list(is);
    std::string line;
    while (std::getline(is, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    std::istringstream ls(line);
    std::vector<Vertex> pos;
    Vertex v;
    while (ls >> v) pos.push_back(v);
    Saw s(std::move(pos));
    if (saw_invalid_reason(g, s) != InvalidReason::None)
        throw ParseError("saw: backbone line does not describe a saw of the graph");
    return {std::move(g), std::move(s)};
}

// Reductions of a path given by backbone positions: an even position whose
// two sequence neighbors are its backbone neighbors can be dropped, the gap
// bridged by the chord.  Drops are independent, so one path per order from
// |seq| down to |seq| minus the number of droppable positions.
inline OrderFamily position_path_family(const Graph& g, const Saw& s,
                                        const std::vector<int>& seq) {
    std::vector<size_t> removable;
    for (size_t t = 1; t + 1 < seq.size(); ++t) {
        int m = seq[t];
        if (m % 2 != 0) continue;
        int a = seq[t - 1], b = seq[t + 1];
        if ((a == m - 1 && b == m + 1) || (a == m + 1 && b == m - 1)) removable.push_back(t);
    }
    OrderFamily fam;
    fam.u = s.at(seq.front());
    fam.v = s.at(seq.back());
    for (size_t drop = 0; drop <= removable.size(); ++drop) {
        std::vector<Vertex> vs;
        size_t next = 0;
        for (size_t t = 0; t < seq.size(); ++t) {
            if (next < drop && removable[next] == t) {
                ++next;
                continue;
            }
            vs.push_back(s.at(seq[t]));
        }
        Path p(std::move(vs));
        if (path_invalid_reason(g, p) != InvalidReason::None)
            throw Error("saw reduction produced an invalid path");
        fam.insert(p);
    }
    return fam;
}

// Backbone walk from position a forward to position b (cyclic, inclusive).
inline std::vector<int> forward_positions(const Saw& s, int a, int b) {
    const int n = s.n();
    std::vector<int> seq;
    int i = ((a - 1) % n + n) % n + 1;
    seq.push_back(i);
    while (i != ((b - 1) % n + n) % n + 1) {
        i = i % n + 1;
        seq.push_back(i);
    }
    return seq;
}

// Family of v_a..v_b paths along the forward backbone arc, all reductions.
inline OrderFamily backbone_path_family(const Graph& g, const Saw& s, int a, int b) {
    return position_path_family(g, s, forward_positions(s, a, b));
}

// Cycle of order q from the backbone cycle, q in [k+1, 2k+1]: drop 2k+1-q
// even positions, each gap bridged by a chord (q = k+1 keeps only the odd
// positions).
inline Cycle backbone_cycle_of_order(const Graph& g, const Saw& s, int q) {
    const int n = s.n();
    int drop = n - q;
    if (drop < 0 || drop > s.k())
        throw OutOfRange("backbone_cycle_of_order: q=" + std::to_string(q) + " outside [" +
                         std::to_string(s.k() + 1) + "," + std::to_string(n) + "]");
    std::vector<Vertex> vs;
    int dropped = 0;
    for (int i = 1; i <= n; ++i) {
        if (i % 2 == 0 && dropped < drop) {
            ++dropped;
            continue;
        }
        vs.push_back(s.at(i));
    }
    Cycle c(std::move(vs));
    if (cycle_invalid_reason(g, c) != InvalidReason::None)
        throw Error("backbone_cycle_of_order: invalid cycle");
    return c;
}

// Grow a chorded path two vertices at a time and close it into a saw.  Any
// r+1 neighbors off the path contain an edge (else they witness alpha > r),
// which extends the path; once both of the last two vertices have at most r
// neighbors off the path, closing at the smallest attached index makes every
// retained vertex count toward their in-saw degrees, so d(S) >= p - r.
inline Saw find_saw(const Graph& g, int p, int r) {
    if (r < 1) throw PreconditionViolated("find_saw: r must be >= 1");
    if (g.min_degree() < p) {
        for (int u = 0; u < g.order(); ++u)
            if (g.degree(u) < p)
                throw PreconditionViolated("find_saw: vertex " + std::to_string(u) +
                                           " has degree below " + std::to_string(p));
    }
    std::vector<Vertex> path{0};
    std::vector<char> on_path(g.order(), 0);
    on_path[0] = 1;

    auto outside_neighbors = [&](Vertex u) {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(u))
            if (!on_path[w]) out.push_back(w);
        return out;
    };
    // First edge among `out` in lexicographic pair order; empty if `out` is
    // independent.
    auto find_edge = [&](const std::vector<Vertex>& out) -> std::vector<Vertex> {
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j)
                if (g.adjacent(out[i], out[j])) return {out[i], out[j]};
        return {};
    };

    for (;;) {
        bool extended = false;
        for (int which = 0; which < 2 && !extended; ++which) {
            if (which == 1 && path.size() < 2) break;
            Vertex tip = which == 0 ? path.back() : path[path.size() - 2];
            auto out = outside_neighbors(tip);
            if (static_cast<int>(out.size()) < r + 1) continue;
            auto e = find_edge(out);
            if (e.empty()) {
                out.resize(r + 1);
                throw HypothesisViolated("find_saw: independent set of size " +
                                             std::to_string(r + 1) + " found",
                                         out);
            }
            // swapping the last two keeps a valid chorded path: the old
            // chord becomes the last backbone edge and vice versa
            if (which == 1) std::swap(path[path.size() - 1], path[path.size() - 2]);
            path.push_back(e[0]);
            path.push_back(e[1]);
            on_path[e[0]] = on_path[e[1]] = 1;
            extended = true;
        }
        if (!extended) break;
    }
    const int len = static_cast<int>(path.size());
    if (len < 3) throw SawNotFound("find_saw: chorded path stalled below 3 vertices");

    Vertex last1 = path[len - 2], last2 = path[len - 1];
    int idx = -1;
    for (int i = 0; i < len - 2; ++i)
        if (g.adjacent(path[i], last1) || g.adjacent(path[i], last2)) {
            idx = i;
            break;
        }
    if (idx < 0) throw SawNotFound("find_saw: no attachment below the last two vertices");
    if (!g.adjacent(path[idx], last2)) std::swap(path[len - 1], path[len - 2]);

    std::vector<Vertex> saw_pos;
    if ((idx + 1) % 2 == 1) {
        saw_pos.assign(path.begin() + idx, path.end());
    } else {
        // even attachment: detour through the preceding vertex, re-entering
        // the path over the chord (v_{i-1}, v_{i+1})
        saw_pos.push_back(path[idx]);
        saw_pos.push_back(path[idx - 1]);
        saw_pos.insert(saw_pos.end(), path.begin() + idx + 1, path.end());
    }
    Saw s(std::move(saw_pos));
    if (saw_invalid_reason(g, s) != InvalidReason::None)
        throw Error("find_saw: assembled sequence is not a saw");
    return s;
}

// All orders from 2 up to 2k+1 between the last two backbone vertices.
// Small orders come from the shared edge and the chord through v_{2k-1};
// large orders from reducing the wrap-around backbone path; middle orders
// from scanning the backbone cycle for a sub-path whose two ends attach to
// v_{2k} and v_{2k+1}.
inline OrderFamily endpair_paths(const Graph& g, const Saw& s) {
    if (saw_invalid_reason(g, s) != InvalidReason::None)
        throw PreconditionViolated("endpair_paths: not a saw");
    const int n = s.n();
    const int k = s.k();
    OrderFamily fam;
    fam.u = s.at(2 * k);
    fam.v = s.at(n);
    fam.insert(Path({s.at(2 * k), s.at(n)}));
    fam.insert(Path({s.at(2 * k), s.at(2 * k - 1), s.at(n)}));

    // wrap path v_{2k+1}, v_1, ..., v_{2k} and its reductions: [k+2, 2k+1]
    std::vector<int> wrap{n};
    for (int i = 1; i <= 2 * k; ++i) wrap.push_back(i);
    for (const auto& [q, p] : position_path_family(g, s, wrap).paths) fam.insert(p);

    // backbone cycle relabeled w_1 = v_{2k}, ..., w_{2k} = v_1, w_n = v_{2k+1}
    auto w = [&](int i) { return i == n ? s.at(n) : s.at(2 * k + 1 - i); };
    for (int target = 4; target <= n; ++target) {
        if (fam.paths.count(target)) continue;
        const int seg = target - 2;  // cycle vertices strictly between u and v
        for (int i = 2; i + seg - 1 <= n - 1; ++i) {
            Vertex a = w(i), b = w(i + seg - 1);
            Path cand;
            if (g.adjacent(fam.u, a) && g.adjacent(fam.v, b)) {
                std::vector<Vertex> vs{fam.u};
                for (int t = i; t <= i + seg - 1; ++t) vs.push_back(w(t));
                vs.push_back(fam.v);
                cand = Path(std::move(vs));
            } else if (g.adjacent(fam.u, b) && g.adjacent(fam.v, a)) {
                std::vector<Vertex> vs{fam.u};
                for (int t = i + seg - 1; t >= i; --t) vs.push_back(w(t));
                vs.push_back(fam.v);
                cand = Path(std::move(vs));
            } else {
                continue;
            }
            if (path_invalid_reason(g, cand) != InvalidReason::None)
                throw Error("endpair_paths: invalid scan path");
            fam.insert(cand);
            break;
        }
    }
    return fam;
}

// Paths of many orders between the consecutive pair (v_j, v_{j+1}).  Routes
// run from v_j down to some v_i adjacent to v_{2k+1}, across v_{2k+1} to
// some v_l adjacent to it, then down to v_{j+1}; the pair (i,l) is walked
// down from (1,2k) through dominated pairs so the per-pair order intervals
// chain.  j = 2k is served by endpair_paths.
inline OrderFamily consecutive_pair_paths(const Graph& g, const Saw& s, int j) {
    if (saw_invalid_reason(g, s) != InvalidReason::None)
        throw PreconditionViolated("consecutive_pair_paths: not a saw");
    const int n = s.n();
    const int k = s.k();
    if (j < 1 || j > n) throw OutOfRange("consecutive_pair_paths: j out of range");
    if (j == 2 * k) return endpair_paths(g, s);

    const bool rotate = (j == n);  // pair (v_{2k+1}, v_1): build at j=1, rotate
    const int jj = rotate ? 1 : j;

    OrderFamily fam;
    fam.u = s.at(j);
    fam.v = s.at(j + 1);
    auto add = [&](Path p) {
        if (rotate) {
            // (v_1, v_n, ...) -> (v_n, ..., v_1); (v_2, v_1) closes it
            std::rotate(p.vertices.begin(), p.vertices.begin() + 1, p.vertices.end());
        }
        if (path_invalid_reason(g, p) != InvalidReason::None)
            throw Error("consecutive_pair_paths: invalid path");
        fam.insert(p);
    };

    if (rotate) {
        fam.insert(Path({s.at(n), s.at(1)}));
        for (Vertex w : s.pos)
            if (g.adjacent(w, s.at(n)) && g.adjacent(w, s.at(1)) && w != s.at(n) &&
                w != s.at(1)) {
                fam.insert(Path({s.at(n), w, s.at(1)}));
                break;
            }
    } else {
        add(Path({s.at(jj), s.at(jj + 1)}));
        if (jj % 2 == 0)
            add(Path({s.at(jj), s.at(jj - 1), s.at(jj + 1)}));
        else
            add(Path({s.at(jj), s.at(jj + 2), s.at(jj + 1)}));
    }

    Vertex hub = s.at(n);
    auto joined = [&](int i) { return g.adjacent(s.at(i), hub); };
    int ci = 1, cl = 2 * k;  // both adjacent to v_n via wrap and backbone
    for (;;) {
        std::vector<int> seq;
        for (int t = jj; t >= ci; --t) seq.push_back(t);
        seq.push_back(n);
        for (int t = cl; t >= jj + 1; --t) seq.push_back(t);
        for (const auto& [q, p] : position_path_family(g, s, seq).paths) add(p);

        int bi = -1, bl = -1, bspan = -1;
        for (int i2 = ci; i2 <= jj; ++i2) {
            if (!joined(i2)) continue;
            for (int l2 = jj + 1; l2 <= cl; ++l2) {
                if (!joined(l2)) continue;
                int span = l2 - i2;
                if (span >= cl - ci) continue;
                if (span > bspan) {
                    bspan = span;
                    bi = i2;
                    bl = l2;
                }
            }
        }
        if (bi < 0) break;
        ci = bi;
        cl = bl;
    }
    return fam;
}

// Paths of many orders between two arbitrary backbone positions pi < pj.
// Both backbone arcs always contribute; when the pair is far apart on the
// cycle, longer routes detour through v_{2k+1} and v_{2k} picking up most of
// the backbone.
inline OrderFamily any_pair_paths(const Graph& g, const Saw& s, int pi, int pj) {
    if (saw_invalid_reason(g, s) != InvalidReason::None)
        throw PreconditionViolated("any_pair_paths: not a saw");
    const int n = s.n();
    const int twok = n - 1;
    if (pi > pj) std::swap(pi, pj);
    if (pi < 1 || pj > n || pi == pj) throw OutOfRange("any_pair_paths: bad positions");

    OrderFamily fam;
    fam.u = s.at(pi);
    fam.v = s.at(pj);
    auto add_seq = [&](const std::vector<int>& seq) {
        for (const auto& [q, p] : position_path_family(g, s, seq).paths) fam.insert(p);
    };
    add_seq(forward_positions(s, pi, pj));
    add_seq(forward_positions(s, pj, pi));  // endpoints swapped; family allows either

    Vertex vlast = s.at(n), vprev = s.at(twok);
    auto near_last = [&](int t) { return g.adjacent(s.at(t), vlast); };
    auto near_prev = [&](int t) { return g.adjacent(s.at(t), vprev); };

    if (pj <= twok - 1) {
        // descend pi..1, wrap to v_n, cross to the stretch (pi,pj), exit to
        // v_{2k}, descend to pj
        int p1 = 0, q1 = 0;
        for (int t = pi + 1; t < pj; ++t)
            if (near_last(t)) {
                p1 = t;
                break;
            }
        for (int t = pj - 1; t > pi; --t)
            if (near_prev(t)) {
                q1 = t;
                break;
            }
        if (p1 && q1 && p1 <= q1) {
            std::vector<int> seq;
            for (int t = pi; t >= 1; --t) seq.push_back(t);
            seq.push_back(n);
            for (int t = p1; t <= q1; ++t) seq.push_back(t);
            for (int t = twok; t >= pj; --t) seq.push_back(t);
            add_seq(seq);
        }
        // mirror: enter the stretch from v_n at its top, leave at the
        // bottom over v_{2k}
        int q2 = 0, p2 = 0;
        for (int t = pj - 1; t > pi; --t)
            if (near_last(t)) {
                q2 = t;
                break;
            }
        for (int t = pi + 1; t < pj; ++t)
            if (near_prev(t)) {
                p2 = t;
                break;
            }
        if (q2 && p2 && p2 <= q2) {
            std::vector<int> seq;
            for (int t = pi; t >= 1; --t) seq.push_back(t);
            seq.push_back(n);
            for (int t = q2; t >= p2; --t) seq.push_back(t);
            for (int t = twok; t >= pj; --t) seq.push_back(t);
            add_seq(seq);
        }
    } else if (pi <= twok - 1 && pj == n) {
        // pair (v_pi, v_n): take the wrap, climb to the largest v_q below
        // pi adjacent to v_{2k}, jump up, descend to pi
        for (int q = pi - 1; q >= 1; --q)
            if (near_prev(q)) {
                std::vector<int> seq;
                seq.push_back(n);
                for (int t = 1; t <= q; ++t) seq.push_back(t);
                for (int t = twok; t >= pi; --t) seq.push_back(t);
                add_seq(seq);
                break;
            }
    } else if (pj == twok && pi <= twok - 1) {
        // pair (v_pi, v_2k): descend pi..1, wrap to v_n, re-enter at the
        // smallest v_q adjacent to v_n above pi, climb to v_2k
        for (int q = pi + 1; q < twok; ++q)
            if (near_last(q)) {
                std::vector<int> seq;
                for (int t = pi; t >= 1; --t) seq.push_back(t);
                seq.push_back(n);
                for (int t = q; t <= twok; ++t) seq.push_back(t);
                add_seq(seq);
                break;
            }
    }
    return fam;
}

// Cycle of order q through the saw, q in [4r, 2k+1], assuming alpha(S) <= r
// and 2r <= k.  Orders above k come from backbone cycle reductions; below,
// from splicing a reduced prefix path against a chopped suffix path across
// the edges (v_1, v_{2k+1}) and (v_{4r-1}, v_{4r}).
inline Cycle saw_cycle(const Graph& g, const Saw& s, int r, int q) {
    if (saw_invalid_reason(g, s) != InvalidReason::None)
        throw PreconditionViolated("saw_cycle: not a saw");
    const int n = s.n();
    const int k = s.k();
    if (r < 1 || 2 * r > k) throw PreconditionViolated("saw_cycle: need 1 <= 2r <= k");
    if (q < 4 * r || q > n)
        throw OutOfRange("saw_cycle: q=" + std::to_string(q) + " outside [" +
                         std::to_string(4 * r) + "," + std::to_string(n) + "]");
    if (q >= k + 1) return backbone_cycle_of_order(g, s, q);

    // prefix v_1..v_{4r-1} reduces to every order in [2r, 4r-1]
    std::vector<int> prefix;
    for (int t = 1; t <= 4 * r - 1; ++t) prefix.push_back(t);
    OrderFamily fam1 = position_path_family(g, s, prefix);

    // suffix path v_{2k+1}, v_{2k}, ..., v_{4r} chopped with bound r: step
    // orders are at most 2r-1 apart, so some step pairs with a prefix order
    std::vector<Vertex> suffix;
    for (int t = n; t >= 4 * r; --t) suffix.push_back(s.at(t));
    ReductionLadder ladder = chop(g, Path(std::move(suffix)), r);
    OrderFamily fam2 = family_from_ladder(ladder);

    return detail::splice_cycle(g, s.at(1), s.at(4 * r - 1), s.at(n), s.at(4 * r), fam1, fam2,
                                2 * r, 4 * r - 1, q);
}

}  // namespace cycert

#endif
