#include "doctest.h"

#include <algorithm>
#include <set>

#include "cycert/eg_paths.hpp"
#include "cycert/gen.hpp"
#include "cycert/oracles.hpp"

using namespace cycert;

TEST_CASE("path_at_least basic guarantees") {
    Graph c6 = Graph::cycle_graph(6);
    Path p = path_at_least(c6, 0, 1, 2);
    CHECK(p.order() >= 3);
    CHECK(verify_certificate_part(c6, p));
    CHECK(((p.front() == 0 && p.back() == 1) || (p.front() == 1 && p.back() == 0)));

    Graph k5 = Graph::complete(5);
    Path q = path_at_least(k5, 0, 1, 4);
    CHECK(q.order() == 5);
    CHECK(verify_certificate_part(k5, q));
}

TEST_CASE("path_at_least strict preconditions") {
    Graph path3(3);
    path3.add_edge(0, 1);
    path3.add_edge(1, 2);
    CHECK_THROWS_AS(path_at_least(path3, 0, 2, 1), PreconditionViolated);  // not 2-connected
    Graph c6 = Graph::cycle_graph(6);
    CHECK_THROWS_AS(path_at_least(c6, 0, 1, 3), PreconditionViolated);  // degree 2 < 3
    SearchOptions lax;
    lax.strict = false;
    CHECK_NOTHROW(path_at_least(path3, 0, 2, 1, lax));
}

TEST_CASE("path_at_least agrees with the enumeration oracle") {
    Rng rng(11);
    SearchOptions lax;
    lax.strict = false;
    for (int t = 0; t < 30; ++t) {
        int n = rng.range(5, 10);
        Graph g = two_connected_random(n, rng.range(2, 4), rng.next());
        int u = rng.range(0, n - 1), v = rng.range(0, n - 1);
        if (u == v) v = (v + 1) % n;
        std::set<int> oracle = all_path_orders(g, u, v);
        int best = *oracle.rbegin();
        for (int delta = 1; delta < n; ++delta) {
            if (delta + 1 <= best) {
                Path p = path_at_least(g, u, v, delta, lax);
                CHECK(p.order() >= delta + 1);
                CHECK(verify_certificate_part(g, p));
                CHECK(oracle.count(p.order()) == 1);
            } else {
                CHECK_THROWS_AS(path_at_least(g, u, v, delta, lax), NotFound);
            }
        }
    }
}

namespace {

// Two cliques A, B sharing only the poles u=0, v=1: every vertex of either
// side is adjacent to both poles.
Graph split_instance(int na, int nb) {
    Graph g(2 + na + nb);
    for (int i = 0; i < na; ++i) {
        g.add_edge(2 + i, 0);
        g.add_edge(2 + i, 1);
        for (int j = i + 1; j < na; ++j) g.add_edge(2 + i, 2 + j);
    }
    for (int i = 0; i < nb; ++i) {
        g.add_edge(2 + na + i, 0);
        g.add_edge(2 + na + i, 1);
        for (int j = i + 1; j < nb; ++j) g.add_edge(2 + na + i, 2 + na + j);
    }
    return g;
}

}  // namespace

TEST_CASE("path_avoiding stays on one side of a split") {
    const int na = 3, nb = 4;
    Graph g = split_instance(na, nb);
    std::vector<Vertex> avoid;
    for (int i = 0; i < na; ++i) avoid.push_back(2 + i);
    int delta = std::min(na, nb) + 1;
    Path p = path_avoiding(g, 0, 1, VertexSet(avoid), delta);
    CHECK(p.order() >= delta + 1);
    CHECK(verify_certificate_part(g, p));
    for (Vertex w : p.vertices) {
        bool on_allowed_side = (w == 0 || w == 1 || w >= 2 + na);
        CHECK(on_allowed_side);
    }

    CHECK_THROWS_AS(path_avoiding(g, 0, 1, VertexSet({0, 3}), 2), PreconditionViolated);
    CHECK_THROWS_AS(path_avoiding(g, 0, 1, VertexSet(std::vector<Vertex>{}), 2),
                    PreconditionViolated);
    // an avoid set with edges into the remainder is not a split part
    CHECK_THROWS_AS(path_avoiding(g, 0, 1, VertexSet({2}), 2), PreconditionViolated);
}

TEST_CASE("path_one_exception tolerates one low-degree vertex") {
    // C_5 plus a degree-2 apex attached at 0 and 2; all cycle vertices have
    // degree >= 2 and the apex is the exception.
    Graph g = Graph::cycle_graph(5);
    Graph h(6);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(5, 0);
    h.add_edge(5, 2);
    Path p = path_one_exception(h, 5, 1, 3, 2);
    CHECK(p.order() >= 3);
    CHECK(verify_certificate_part(h, p));
    std::set<int> oracle = all_path_orders(h, 1, 3);
    CHECK(oracle.count(p.order()) == 1);
}

TEST_CASE("path_one_exception with endpoint exception reduces to path_at_least") {
    Graph k5 = Graph::complete(5);
    Path p = path_one_exception(k5, 0, 0, 1, 4);
    CHECK(p.order() == 5);
    CHECK(verify_certificate_part(k5, p));
}

TEST_CASE("path_one_exception randomized against oracle") {
    Rng rng(23);
    SearchOptions lax;
    lax.strict = false;
    for (int t = 0; t < 25; ++t) {
        int n = rng.range(6, 10);
        Graph base = two_connected_random(n, rng.range(2, 4), rng.next());
        Graph g(n + 1);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        int attach = rng.range(2, 3);
        for (int i = 0; i < attach; ++i) g.add_edge(n, rng.range(0, n - 1));
        if (g.degree(n) < 2) g.add_edge(n, (g.neighbors(n)[0] + 1) % n);
        int u = rng.range(0, n - 1), v = rng.range(0, n - 1);
        if (u == v) v = (v + 1) % n;
        std::set<int> oracle = all_path_orders(g, u, v);
        int delta = rng.range(1, std::max(1, *oracle.rbegin() - 1));
        Path p = path_one_exception(g, n, u, v, delta, lax);
        CHECK(p.order() >= delta + 1);
        CHECK(verify_certificate_part(g, p));
        CHECK(oracle.count(p.order()) == 1);
    }
}

TEST_CASE("two_connected_random generator invariants") {
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        int n = rng.range(4, 12);
        int delta = rng.range(2, 3);
        Graph g = two_connected_random(n, delta, rng.next());
        CHECK(g.order() == n);
        CHECK(g.min_degree() >= delta);
        CHECK(is_two_connected(g));
    }
}
