#ifndef CYCERT_WITNESS_HPP
#define CYCERT_WITNESS_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cycert/blocks.hpp"
#include "cycert/chop.hpp"
#include "cycert/eg_paths.hpp"
#include "cycert/errors.hpp"
#include "cycert/graph.hpp"
#include "cycert/oracles.hpp"
#include "cycert/saw.hpp"

namespace cycert {

inline constexpr int kCertificateSchemaVersion = 1;

enum class OutcomeKind { CycleFound, IndependentSetFound, Failure };

struct TraceRecord {
    std::string case_name;
    std::string lemma;
    std::string params;
    int output_order = 0;
};

// Result of the main engine: either a cycle of order p+1, an independent
// set of size r+1, or a declared failure with the reason.  The trace lists
// the structural decisions taken on the way, outermost first.
struct Certificate {
    OutcomeKind kind = OutcomeKind::Failure;
    int p = 0;
    int r = 0;
    Cycle cycle;
    VertexSet independent_set;
    std::string message;
    std::vector<TraceRecord> trace;
};

inline bool verify_certificate(const Graph& g, const Certificate& c) {
    switch (c.kind) {
        case OutcomeKind::CycleFound:
            return c.cycle.order() == c.p + 1 &&
                   cycle_invalid_reason(g, c.cycle) == InvalidReason::None;
        case OutcomeKind::IndependentSetFound:
            return c.independent_set.size() == c.r + 1 &&
                   independent_set_invalid_reason(g, c.independent_set) == InvalidReason::None;
        case OutcomeKind::Failure:
            return false;
    }
    return false;
}

inline nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["schema_version"] = kCertificateSchemaVersion;
    j["p"] = c.p;
    j["r"] = c.r;
    switch (c.kind) {
        case OutcomeKind::CycleFound:
            j["kind"] = "cycle";
            j["cycle"] = c.cycle.vertices;
            break;
        case OutcomeKind::IndependentSetFound:
            j["kind"] = "independent_set";
            j["independent_set"] = c.independent_set.members;
            break;
        case OutcomeKind::Failure:
            j["kind"] = "failure";
            j["message"] = c.message;
            break;
    }
    nlohmann::json tr = nlohmann::json::array();
    for (const auto& t : c.trace) {
        tr.push_back({{"case", t.case_name},
                      {"lemma", t.lemma},
                      {"params", t.params},
                      {"output_order", t.output_order}});
    }
    j["trace"] = tr;
    return j;
}

// Disjoint union of r cliques of order p: p*r vertices, independence number
// exactly r, longest cycle order p.
inline Graph extremal_graph(int p, int r) {
    if (p < 3 || r < 1) throw HypothesisViolated("extremal_graph: need p >= 3 and r >= 1");
    Graph g(p * r);
    for (int c = 0; c < r; ++c)
        for (int u = c * p; u < (c + 1) * p; ++u)
            for (int v = u + 1; v < (c + 1) * p; ++v) g.add_edge(u, v);
    return g;
}

namespace detail {

inline std::optional<Path> shortest_path(const Graph& g, Vertex a, Vertex b) {
    std::vector<int> prev(g.order(), -1);
    std::vector<Vertex> queue{a};
    prev[a] = a;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex u = queue[qi];
        if (u == b) {
            std::vector<Vertex> vs;
            for (Vertex w = b;; w = prev[w]) {
                vs.push_back(w);
                if (w == a) break;
            }
            std::reverse(vs.begin(), vs.end());
            return Path(std::move(vs));
        }
        for (Vertex w : g.neighbors(u))
            if (prev[w] < 0) {
                prev[w] = u;
                queue.push_back(w);
            }
    }
    return std::nullopt;
}

// The recursive engine behind ramsey_witness.  Invariant on every call to
// find_cycle(g, a): alpha(g) == a exactly and v(g) >= p*a + 1; under those
// the return is a cycle of order p+1 or an Error describing where the
// construction fell through.
struct Engine {
    int p;
    SearchOptions opts;
    std::vector<TraceRecord>* trace;

    void log(const std::string& cs, const std::string& lm, const std::string& pr, int order) {
        trace->push_back({cs, lm, pr, order});
    }

    // Prefer the full collating lemma with parameters read off the actual
    // families; outside its stated range, pair the families up directly.
    Cycle collate_or_splice(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                            std::pair<Vertex, Vertex> xe, std::pair<Vertex, Vertex> ye,
                            const OrderFamily& fam1, const OrderFamily& fam2, int target) {
        int b = fam1.paths.rbegin()->first;
        int a1 = fam1.covered_run_start(b);
        int l1 = fam2.paths.begin()->first;
        int l2 = fam2.paths.rbegin()->first;
        int gap = 1, prev = -1;
        for (const auto& [q, pp] : fam2.paths) {
            if (prev >= 0) gap = std::max(gap, q - prev);
            prev = q;
        }
        if (b - a1 >= gap - 1 && target >= a1 + l1 + gap && target <= b + l2) {
            log("collate", "collate",
                "a=" + std::to_string(a1) + " b=" + std::to_string(b) + " k=" +
                    std::to_string(gap),
                target);
            return collate(g, v1, v2, xe, ye, fam1, fam2, gap, a1, b, l1, l2, target);
        }
        log("collate", "collate", "direct pairing", target);
        return splice_cycle(g, xe.first, ye.first, xe.second, ye.second, fam1, fam2, 1, target,
                            target);
    }

    OrderFamily chopped_family(const Graph& g, const Path& path) {
        int a2 = independence_number(g.induced(path.vertices));
        return family_from_ladder(chop(g, path, a2));
    }

    Cycle find_cycle(const Graph& g, int a) {
        const int n = g.order();
        if (a < 1 || n < p * a + 1) throw Error("engine: instance invariant broken");
        if (a == 1) {
            std::vector<Vertex> vs(p + 1);
            std::iota(vs.begin(), vs.end(), 0);
            Cycle c(std::move(vs));
            if (cycle_invalid_reason(g, c) != InvalidReason::None)
                throw Error("engine: alpha=1 graph is not complete");
            log("base", "", "complete graph", c.order());
            return c;
        }

        // low-degree vertex: its non-neighborhood is a full smaller instance
        Vertex u = 0;
        for (int w = 1; w < n; ++w)
            if (g.degree(w) < g.degree(u)) u = w;
        if (g.degree(u) <= p - 1) {
            std::vector<Vertex> keep;
            for (int w = 0; w < n && static_cast<int>(keep.size()) < p * (a - 1) + 1; ++w)
                if (w != u && !g.adjacent(u, w)) keep.push_back(w);
            if (static_cast<int>(keep.size()) < p * (a - 1) + 1)
                throw Error("engine: low-degree reduction came up short");
            std::vector<Vertex> bm;
            Graph h = g.induced(keep, &bm);
            log("degree-lift", "", "shed vertex " + std::to_string(u), h.order());
            return map_back(find_cycle(h, independence_number(h)), bm);
        }

        auto comps = connected_components(g);
        if (comps.size() > 1) {
            for (const auto& comp : comps) {
                std::vector<Vertex> bm;
                Graph h = g.induced(comp, &bm);
                int ah = independence_number(h);
                if (h.order() >= p * ah + 1) {
                    log("component", "", "n=" + std::to_string(h.order()), h.order());
                    return map_back(find_cycle(h, ah), bm);
                }
            }
            throw Error("engine: no component meets its own size bound");
        }

        auto bd = block_decomposition(g);
        if (bd.cutvertices.size() > 0) {
            Vertex cu = bd.cutvertices.members.front();
            std::vector<Vertex> rb;
            Graph rem = g.without({cu}, &rb);
            auto parts = connected_components(rem);
            std::vector<std::vector<Vertex>> hosts;
            std::vector<int> alphas;
            for (const auto& part : parts) {
                std::vector<Vertex> hp;
                for (Vertex w : part) hp.push_back(rb[w]);
                std::vector<Vertex> bm;
                Graph h = g.induced(hp, &bm);
                int ah = independence_number(h);
                if (h.order() >= p * ah + 1) {
                    log("cut-part", "", "cut=" + std::to_string(cu), h.order());
                    return map_back(find_cycle(h, ah), bm);
                }
                hosts.push_back(std::move(hp));
                alphas.push_back(ah);
            }
            // all parts are tight; glue the cutvertex onto each in turn
            for (size_t i = 0; i < hosts.size(); ++i) {
                std::vector<Vertex> hp = hosts[i];
                hp.push_back(cu);
                std::vector<Vertex> bm;
                Graph h = g.induced(hp, &bm);
                if (h.order() < p * alphas[i] + 1) continue;
                auto mis = max_independent_set(h);
                if (static_cast<int>(mis.size()) > alphas[i]) continue;
                log("cut-glue", "", "cut=" + std::to_string(cu), h.order());
                return map_back(find_cycle(h, static_cast<int>(mis.size())), bm);
            }
            throw Error("engine: cutvertex decomposition exhausted");
        }

        // connected, no cutvertex, minimum degree >= p
        Saw s = find_saw(g, p, a);
        log("saw", "saw_find",
            "k=" + std::to_string(s.k()) + " d=" + std::to_string(saw_degree(g, s)), s.n());
        if (s.n() >= p + 1) {
            log("long-saw", "saw_cycles", "q=" + std::to_string(p + 1), p + 1);
            // the backbone alone reaches any order >= k+1; the full lemma is
            // only needed (and only applies) for shorter targets
            if (p + 1 >= s.k() + 1) return backbone_cycle_of_order(g, s, p + 1);
            return saw_cycle(g, s, a, p + 1);
        }
        return basin(g, a, s);
    }

    // Saw shorter than the target cycle: route part of the cycle through the
    // remainder graph and collate against a saw path family.
    Cycle basin(const Graph& g, int a, const Saw& s) {
        const int n = s.n();
        VertexSet sset(s.vertices());
        std::vector<Vertex> sb;
        Graph gstar = g.without(s.pos, &sb);
        if (gstar.order() == 0) throw Error("engine: saw covers the whole graph");
        VertexSet star_set(sb);

        if (is_two_connected(gstar)) return case_biconnected(g, s, gstar, sb, sset, star_set);

        auto comps = connected_components(gstar);
        if (auto c = try_endblock_pair(g, s, sb, comps, sset)) return *c;

        for (const auto& comp : comps) {
            if (comp.size() < 3) continue;
            std::vector<Vertex> ch;
            for (Vertex w : comp) ch.push_back(sb[w]);
            Graph cg = g.induced(ch);
            if (!is_two_connected(cg))
                return case_endblock_route(g, s, ch, sset);
        }

        if (comps.size() > 1) return case_components(g, s, sb, comps, sset);
        throw Error("engine: no residual case applies");
    }

    // Case: remainder 2-connected.  Long path between a neighbor of v_{2k}
    // and a neighbor of v_{2k+1}, chopped, collated against the end-pair
    // family.
    Cycle case_biconnected(const Graph& g, const Saw& s, const Graph& gstar,
                           const std::vector<Vertex>& sb, const VertexSet& sset,
                           const VertexSet& star_set) {
        const int n = s.n();
        const int k = s.k();
        Vertex x1 = s.at(2 * k), y1 = s.at(n);
        std::vector<Vertex> A, B;
        for (Vertex w : sb) {
            if (g.adjacent(x1, w)) A.push_back(w);
            if (g.adjacent(y1, w)) B.push_back(w);
        }
        if (A.empty() || B.empty())
            throw Error("engine: saw end vertices have no outside neighbors");
        if (A.size() == 1 && B.size() == 1 && A[0] == B[0]) {
            // single shared outside neighbor closes the full backbone path
            if (p != n) throw Error("engine: shared outside neighbor but saw too short");
            std::vector<Vertex> vs;
            for (int t = 2 * k; t >= 1; --t) vs.push_back(s.at(t));
            vs.push_back(s.at(n));
            vs.push_back(A[0]);
            Cycle c(std::move(vs));
            if (cycle_invalid_reason(g, c) != InvalidReason::None)
                throw Error("engine: shared-neighbor cycle invalid");
            log("remainder-2conn", "", "shared neighbor", c.order());
            return c;
        }
        auto host_index = [&](Vertex hv) {
            return static_cast<int>(std::lower_bound(sb.begin(), sb.end(), hv) - sb.begin());
        };
        OrderFamily fam1 = endpair_paths(g, s);
        int attempts = 0;
        for (Vertex x2 : A)
            for (Vertex y2 : B) {
                if (x2 == y2 || ++attempts > 25) continue;
                try {
                    Path p2s = path_at_least(gstar, host_index(x2), host_index(y2),
                                             std::max(1, p - n), opts);
                    Path p2 = map_back(p2s, sb);
                    log("remainder-2conn", "erdos_gallai", "order " + std::to_string(p2.order()),
                        p2.order());
                    OrderFamily fam2 = chopped_family(g, p2);
                    return collate_or_splice(g, sset, star_set, {x1, x2}, {y1, y2}, fam1, fam2,
                                             p + 1);
                } catch (const Error&) {
                    continue;
                }
            }
        throw Error("engine: 2-connected remainder case failed on all end pairs");
    }

    // Case: some endblock hangs two distinct vertices onto a consecutive saw
    // pair; route through the endblock with its cutvertex as the degree
    // exception and collate against the consecutive-pair family.
    std::optional<Cycle> try_endblock_pair(const Graph& g, const Saw& s,
                                           const std::vector<Vertex>& sb,
                                           const std::vector<std::vector<Vertex>>& comps,
                                           const VertexSet& sset) {
        const int n = s.n();
        for (const auto& comp : comps) {
            if (comp.size() < 3) continue;
            std::vector<Vertex> ch;
            for (Vertex w : comp) ch.push_back(sb[w]);
            std::vector<Vertex> cb;
            Graph cg = g.induced(ch, &cb);
            if (is_two_connected(cg)) continue;
            auto bd = block_decomposition(cg);
            if (bd.cutvertices.size() == 0) continue;
            for (size_t bi = 0; bi < bd.blocks.size(); ++bi) {
                if (!bd.endblock[bi]) continue;
                Vertex zc = -1;
                for (Vertex w : bd.blocks[bi].members)
                    if (bd.cutvertices.contains(w)) zc = w;
                if (zc < 0) continue;
                Vertex zh = cb[zc];
                std::vector<Vertex> bh;
                for (Vertex w : bd.blocks[bi].members) bh.push_back(cb[w]);
                for (int j = 1; j <= n; ++j) {
                    Vertex vj = s.at(j), vj1 = s.at(j + 1);
                    std::vector<Vertex> X, Y;
                    for (Vertex w : bh) {
                        if (w == zh) continue;
                        if (g.adjacent(vj, w)) X.push_back(w);
                        if (g.adjacent(vj1, w)) Y.push_back(w);
                    }
                    Vertex x2 = -1, y2 = -1;
                    for (Vertex xc : X) {
                        for (Vertex yc : Y)
                            if (yc != xc) {
                                x2 = xc;
                                y2 = yc;
                                break;
                            }
                        if (x2 >= 0) break;
                    }
                    if (x2 < 0) continue;
                    try {
                        std::vector<Vertex> bb;
                        Graph bg = g.induced(bh, &bb);
                        auto bidx = [&](Vertex hv) {
                            return static_cast<int>(std::lower_bound(bb.begin(), bb.end(), hv) -
                                                    bb.begin());
                        };
                        Path p2s = path_one_exception(bg, bidx(zh), bidx(x2), bidx(y2),
                                                      std::max(1, p - n), opts);
                        Path p2 = map_back(p2s, bb);
                        log("endblock-pair", "erdos_gallai",
                            "j=" + std::to_string(j) + " order " + std::to_string(p2.order()),
                            p2.order());
                        OrderFamily fam2 = chopped_family(g, p2);
                        OrderFamily fam1 = consecutive_pair_paths(g, s, j);
                        return collate_or_splice(g, sset, VertexSet(bh), {vj, x2}, {vj1, y2},
                                                 fam1, fam2, p + 1);
                    } catch (const Error&) {
                        continue;
                    }
                }
            }
        }
        return std::nullopt;
    }

    // Case: remainder disconnected, components 2-connected.  Pick the
    // component with smallest independence number, run a long path between
    // two crossing-edge feet, collate against a saw family between the two
    // crossing-edge heads.
    Cycle case_components(const Graph& g, const Saw& s, const std::vector<Vertex>& sb,
                          const std::vector<std::vector<Vertex>>& comps, const VertexSet& sset) {
        const int n = s.n();
        int best = -1, best_alpha = -1;
        for (size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].size() < 3) continue;
            std::vector<Vertex> ch;
            for (Vertex w : comps[i]) ch.push_back(sb[w]);
            int ai = independence_number(g.induced(ch));
            if (best < 0 || ai < best_alpha) {
                best = static_cast<int>(i);
                best_alpha = ai;
            }
        }
        if (best < 0) throw Error("engine: all remainder components trivial");
        std::vector<Vertex> ch;
        for (Vertex w : comps[best]) ch.push_back(sb[w]);
        std::vector<Vertex> cb;
        Graph cg = g.induced(ch, &cb);
        auto cidx = [&](Vertex hv) {
            return static_cast<int>(std::lower_bound(cb.begin(), cb.end(), hv) - cb.begin());
        };
        Vertex u1 = ch.front();
        int bestdeg = -1;
        for (Vertex w : ch) {
            int dS = 0;
            for (Vertex sv : s.pos)
                if (g.adjacent(w, sv)) ++dS;
            if (dS > bestdeg) {
                bestdeg = dS;
                u1 = w;
            }
        }
        std::vector<std::pair<Vertex, Vertex>> cross;  // (saw host, component host)
        for (Vertex sv : s.pos)
            for (Vertex w : ch)
                if (g.adjacent(sv, w)) cross.push_back({sv, w});
        int attempts = 0;
        for (size_t i = 0; i < cross.size(); ++i)
            for (size_t j = 0; j < cross.size(); ++j) {
                auto [xa, wa] = cross[i];
                auto [xb, wb] = cross[j];
                if (xa == xb || wa == wb || ++attempts > 40) continue;
                OrderFamily fam1 =
                    any_pair_paths(g, s, s.position_of(xa), s.position_of(xb));
                for (int delta : {(p + 1) / 2, std::max(1, p - n)}) {
                    try {
                        Path p2s = path_one_exception(cg, cidx(u1), cidx(wa), cidx(wb), delta,
                                                      opts);
                        Path p2 = map_back(p2s, cb);
                        log("components", "erdos_gallai", "order " + std::to_string(p2.order()),
                            p2.order());
                        OrderFamily fam2 = chopped_family(g, p2);
                        return collate_or_splice(g, sset, VertexSet(ch), {xa, wa}, {xb, wb},
                                                 fam1, fam2, p + 1);
                    } catch (const Error&) {
                        continue;
                    }
                }
            }
        throw Error("engine: disconnected remainder case failed on all crossings");
    }

    // Case: a remainder component has a cutvertex.  Route either out of an
    // endblock through its cutvertex into the rest of the component, or
    // between two attachment vertices inside the endblock.
    Cycle case_endblock_route(const Graph& g, const Saw& s, const std::vector<Vertex>& ch,
                              const VertexSet& sset) {
        const int n = s.n();
        std::vector<Vertex> cb;
        Graph cg = g.induced(ch, &cb);
        auto bd = block_decomposition(cg);
        if (bd.cutvertices.size() == 0) throw Error("engine: expected a cutvertex");

        // endblock with smallest independence number
        int best = -1, best_alpha = -1;
        for (size_t bi = 0; bi < bd.blocks.size(); ++bi) {
            if (!bd.endblock[bi] || bd.blocks[bi].size() < 3) continue;
            std::vector<Vertex> bh;
            for (Vertex w : bd.blocks[bi].members) bh.push_back(cb[w]);
            int ai = independence_number(g.induced(bh));
            if (best < 0 || ai < best_alpha) {
                best = static_cast<int>(bi);
                best_alpha = ai;
            }
        }
        if (best < 0) throw Error("engine: no usable endblock");
        Vertex zc = -1;
        for (Vertex w : bd.blocks[best].members)
            if (bd.cutvertices.contains(w)) zc = w;
        if (zc < 0) throw Error("engine: endblock without cutvertex");
        Vertex zh = cb[zc];
        std::vector<Vertex> bh;
        for (Vertex w : bd.blocks[best].members) bh.push_back(cb[w]);
        std::vector<Vertex> bb;
        Graph bg = g.induced(bh, &bb);
        auto bidx = [&](Vertex hv) {
            return static_cast<int>(std::lower_bound(bb.begin(), bb.end(), hv) - bb.begin());
        };
        VertexSet bset(bh);

        Vertex u1 = -1;
        int bestdeg = -1;
        for (Vertex w : bh) {
            if (w == zh) continue;
            int dS = 0;
            for (Vertex sv : s.pos)
                if (g.adjacent(w, sv)) ++dS;
            if (dS > bestdeg) {
                bestdeg = dS;
                u1 = w;
            }
        }
        std::vector<Vertex> x1cands;
        for (Vertex sv : s.pos)
            if (g.adjacent(u1, sv)) x1cands.push_back(sv);

        // route out of the endblock: long path u1..z inside, shortest path
        // z..u2 outside, family = reductions of the inside part extended by
        // the fixed outside tail
        std::vector<Vertex> outside;  // component hosts outside the endblock
        for (Vertex w : ch)
            if (!bset.contains(w) || w == zh) outside.push_back(w);
        std::vector<Vertex> ob;
        Graph og = g.induced(outside, &ob);
        auto oidx = [&](Vertex hv) {
            return static_cast<int>(std::lower_bound(ob.begin(), ob.end(), hv) - ob.begin());
        };
        int attempts = 0;
        for (Vertex x1 : x1cands) {
            for (Vertex u2 : outside) {
                if (u2 == zh) continue;
                Vertex x2 = -1;
                for (Vertex sv : s.pos)
                    if (sv != x1 && g.adjacent(u2, sv)) {
                        x2 = sv;
                        break;
                    }
                if (x2 < 0 || ++attempts > 40) continue;
                auto p2o = shortest_path(og, oidx(zh), oidx(u2));
                if (!p2o) continue;
                Path tail = map_back(*p2o, ob);  // z .. u2
                for (int delta : {(p + 1) / 2, std::max(1, p - n)}) {
                    try {
                        Path p1s = path_at_least(bg, bidx(u1), bidx(zh), delta, opts);
                        Path p1 = map_back(p1s, bb);  // u1 .. z
                        int a2 = independence_number(g.induced(p1.vertices));
                        ReductionLadder ladder = chop(g, p1, a2);
                        OrderFamily fam2;
                        fam2.u = u1;
                        fam2.v = u2;
                        for (const auto& step : ladder.steps) {
                            std::vector<Vertex> vs = step.vertices;  // ends at z
                            vs.insert(vs.end(), tail.vertices.begin() + 1,
                                      tail.vertices.end());
                            Path q(std::move(vs));
                            if (path_invalid_reason(g, q) != InvalidReason::None)
                                throw Error("engine: endblock route path invalid");
                            fam2.insert(q);
                        }
                        log("endblock-route", "erdos_gallai",
                            "inside " + std::to_string(p1.order()) + " tail " +
                                std::to_string(tail.order()),
                            p1.order() + tail.order() - 1);
                        OrderFamily fam1 =
                            any_pair_paths(g, s, s.position_of(x1), s.position_of(x2));
                        return collate_or_splice(g, sset, VertexSet(ch), {x1, u1}, {x2, u2},
                                                 fam1, fam2, p + 1);
                    } catch (const Error&) {
                        continue;
                    }
                }
            }
        }

        // both attachments inside the endblock
        attempts = 0;
        for (Vertex x1 : x1cands) {
            for (Vertex u2 : bh) {
                if (u2 == zh || u2 == u1) continue;
                Vertex x2 = -1;
                for (Vertex sv : s.pos)
                    if (sv != x1 && g.adjacent(u2, sv)) {
                        x2 = sv;
                        break;
                    }
                if (x2 < 0 || ++attempts > 40) continue;
                for (int delta : {p - 1, (p + 1) / 2, std::max(1, p - n)}) {
                    try {
                        Path p1s = path_one_exception(bg, bidx(zh), bidx(u1), bidx(u2), delta,
                                                      opts);
                        Path p1 = map_back(p1s, bb);
                        log("endblock-inside", "erdos_gallai",
                            "order " + std::to_string(p1.order()), p1.order());
                        OrderFamily fam2 = chopped_family(g, p1);
                        OrderFamily fam1 =
                            any_pair_paths(g, s, s.position_of(x1), s.position_of(x2));
                        return collate_or_splice(g, sset, bset, {x1, u1}, {x2, u2}, fam1, fam2,
                                                 p + 1);
                    } catch (const Error&) {
                        continue;
                    }
                }
            }
        }
        throw Error("engine: endblock cases failed on all attachments");
    }
};

}  // namespace detail

// Main entry: on any graph of order at least p*r + 1, produce a cycle of
// order p+1 or an independent set of size r+1.  The construction is total
// for p >= 4r + 5; outside that regime a Failure certificate may come back.
inline Certificate ramsey_witness(const Graph& g, int p, int r) {
    if (p < 3 || r < 1) throw HypothesisViolated("ramsey_witness: need p >= 3 and r >= 1");
    if (g.order() < p * r + 1)
        throw HypothesisViolated("ramsey_witness: graph order below p*r + 1");
    Certificate cert;
    cert.p = p;
    cert.r = r;
    auto mis = max_independent_set(g);
    if (static_cast<int>(mis.size()) >= r + 1) {
        mis.resize(r + 1);
        cert.kind = OutcomeKind::IndependentSetFound;
        cert.independent_set = VertexSet(mis);
        cert.trace.push_back({"alpha", "", "independence number exceeds r", r + 1});
        return cert;
    }
    detail::Engine eng{p, SearchOptions{}, &cert.trace};
    eng.opts.strict = false;
    try {
        Cycle c = eng.find_cycle(g, static_cast<int>(mis.size()));
        if (c.order() != p + 1 || cycle_invalid_reason(g, c) != InvalidReason::None)
            throw Error("engine: produced cycle fails verification");
        cert.kind = OutcomeKind::CycleFound;
        cert.cycle = std::move(c);
    } catch (const SizeCapExceeded&) {
        throw;
    } catch (const HypothesisViolated&) {
        throw;
    } catch (const Error& e) {
        cert.kind = OutcomeKind::Failure;
        cert.message = e.what();
    }
    return cert;
}

}  // namespace cycert

#endif
