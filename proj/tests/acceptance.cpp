// Acceptance suite: one line of output per criterion, nonzero exit if any
// fails.  Each criterion carries its own wall-clock budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "cycert/blocks.hpp"
#include "cycert/checks.hpp"
#include "cycert/gen.hpp"
#include "cycert/oracles.hpp"
#include "cycert/witness.hpp"

using namespace cycert;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const std::string& name, bool ok, double secs, double budget,
            const std::string& detail) {
    bool pass = ok && secs <= budget;
    if (!pass) ++failures;
    std::printf("criterion %d (%s): %s [%.1fs / %.0fs]%s%s\n", num, name.c_str(),
                pass ? "PASS" : "FAIL", secs, budget,
                detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
}

void run(int num, const std::string& name, double budget,
         const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(num, name, ok, secs, budget, detail);
}

bool criterion_extremal(std::string& detail) {
    for (int p = 3; p <= 7; ++p)
        for (int r = 1; r <= 3; ++r) {
            Graph g = extremal_graph(p, r);
            if (g.order() != p * r) {
                detail = "wrong order at p=" + std::to_string(p) + " r=" + std::to_string(r);
                return false;
            }
            if (independence_number(g) != r) {
                detail = "wrong independence number at p=" + std::to_string(p) +
                         " r=" + std::to_string(r);
                return false;
            }
            // no cycle longer than p: every component must be a p-clique
            auto comps = connected_components(g);
            if (static_cast<int>(comps.size()) != r) {
                detail = "wrong component count";
                return false;
            }
            for (const auto& c : comps) {
                Graph h = g.induced(c);
                if (h.order() != p || h.edge_count() != p * (p - 1) / 2) {
                    detail = "component is not a p-clique";
                    return false;
                }
            }
        }
    return true;
}

bool criterion_witness_cycles(std::string& detail) {
    Rng rng(20260824);
    for (int t = 0; t < 100; ++t) {
        Graph g = clique_union_cross({13, 14}, rng.range(0, 30), rng.next());
        auto t0 = Clock::now();
        Certificate c = ramsey_witness(g, 13, 2);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.kind != OutcomeKind::CycleFound || !verify_certificate(g, c) ||
            c.cycle.order() != 14) {
            detail = "instance " + std::to_string(t) + ": no verified 14-cycle (" +
                     c.message + ")";
            return false;
        }
        if (secs > 5.0) {
            detail = "instance " + std::to_string(t) + " took " + std::to_string(secs) + "s";
            return false;
        }
    }
    detail = "100/100 verified";
    return true;
}

bool criterion_boundary(std::string& detail) {
    Certificate c1 = ramsey_witness(Graph::complete(27), 13, 2);
    if (c1.kind != OutcomeKind::CycleFound || !verify_certificate(Graph::complete(27), c1)) {
        detail = "complete graph: no verified 14-cycle";
        return false;
    }
    Graph ex = extremal_graph(13, 2);
    Graph g(27);
    for (auto [u, v] : ex.edges()) g.add_edge(u, v);
    Certificate c2 = ramsey_witness(g, 13, 2);
    if (c2.kind != OutcomeKind::IndependentSetFound || !verify_certificate(g, c2) ||
        c2.independent_set.size() != 3) {
        detail = "tight example plus isolated vertex: no independent set of size 3";
        return false;
    }
    return true;
}

bool lemma_criterion(const std::string& lemma, int trials, uint64_t seed, int max_n,
                     std::string& detail) {
    CheckResult res = run_lemma_check(lemma, trials, seed, max_n);
    if (!res.ok()) {
        detail = lemma + ": " + std::to_string(res.failures) + "/" +
                 std::to_string(res.trials) + " failed; first: " + res.message;
        return false;
    }
    return true;
}

bool criterion_saw_suite(std::string& detail) {
    for (const std::string& lemma : {"pr1", "super", "lux", "flat", "saw_cycles"})
        if (!lemma_criterion(lemma, 200, 7001, 13, detail)) return false;
    detail = "5 lemmas x 200 trials";
    return true;
}

}  // namespace

int main() {
    run(1, "tight example family structure", 10, criterion_extremal);
    run(2, "witness cycles on 100 seeded clique unions", 500, criterion_witness_cycles);
    run(3, "boundary instances", 1, criterion_boundary);
    run(4, "path reduction ladders, 500 random instances", 60, [](std::string& d) {
        return lemma_criterion("chop", 500, 4001, 12, d);
    });
    run(5, "saw path family suite, 200 trials per lemma", 300, criterion_saw_suite);
    run(6, "long path search, 300 random + structured instances", 120, [](std::string& d) {
        return lemma_criterion("erdos_gallai", 300, 6001, 11, d);
    });
    run(7, "cycle composition, 100 composed instances", 60, [](std::string& d) {
        return lemma_criterion("collate", 100, 7701, 14, d);
    });
    run(8, "saw growth, 200 seeded instances", 60, [](std::string& d) {
        return lemma_criterion("saw_find", 200, 8801, 30, d);
    });
    return failures == 0 ? 0 : 1;
}
