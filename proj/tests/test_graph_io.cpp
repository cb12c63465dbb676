#include "doctest.h"

#include <set>
#include <sstream>

#include "cycert/blocks.hpp"
#include "cycert/graph.hpp"
#include "cycert/io.hpp"
#include "cycert/oracles.hpp"
#include "cycert/rng.hpp"

using namespace cycert;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

// Brute-force alpha by subset enumeration; independent check on the
// branch-and-bound solver.
int alpha_by_subsets(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (uint32_t mask = 0; mask < (1U << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!(mask & (1U << u))) continue;
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask & (1U << v)) && g.adjacent(u, v)) ok = false;
        }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

Graph random_graph(int n, int percent, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng.below(100)) < percent) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 2);  // duplicate ignored
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(3, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.min_degree() == 0);
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
    CHECK_THROWS_AS(g.add_edge(0, 0), Error);
    CHECK_THROWS_AS(g.add_edge(0, 4), Error);
}

TEST_CASE("complete and cycle constructors") {
    Graph k5 = Graph::complete(5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.min_degree() == 4);
    Graph c6 = Graph::cycle_graph(6);
    CHECK(c6.edge_count() == 6);
    CHECK(c6.min_degree() == 2);
}

TEST_CASE("induced subgraph relabels ascending and maps back") {
    Graph g = Graph::cycle_graph(6);
    std::vector<Vertex> back;
    Graph h = g.induced({5, 1, 0}, &back);
    CHECK(back == std::vector<Vertex>{0, 1, 5});
    CHECK(h.order() == 3);
    CHECK(h.adjacent(0, 1));  // 0-1
    CHECK(h.adjacent(0, 2));  // 0-5
    CHECK_FALSE(h.adjacent(1, 2));
    Path p({1, 0, 2});
    Path q = map_back(p, back);
    CHECK(q.vertices == std::vector<Vertex>{1, 0, 5});
    CHECK(verify_certificate_part(g, q));
}

TEST_CASE("path cycle and independent set validation") {
    Graph g = Graph::cycle_graph(5);
    CHECK(path_invalid_reason(g, Path({0, 1, 2})) == InvalidReason::None);
    CHECK(path_invalid_reason(g, Path({0, 2})) == InvalidReason::MissingEdge);
    CHECK(path_invalid_reason(g, Path({0, 1, 0})) == InvalidReason::RepeatedVertex);
    CHECK(path_invalid_reason(g, Path(std::vector<Vertex>{})) == InvalidReason::Empty);
    CHECK(path_invalid_reason(g, Path({0, 7})) == InvalidReason::VertexOutOfRange);
    CHECK(cycle_invalid_reason(g, Cycle({0, 1, 2, 3, 4})) == InvalidReason::None);
    CHECK(cycle_invalid_reason(g, Cycle({0, 1})) == InvalidReason::TooShort);
    CHECK(cycle_invalid_reason(g, Cycle({0, 1, 2})) == InvalidReason::MissingEdge);
    CHECK(independent_set_invalid_reason(g, VertexSet({0, 2})) == InvalidReason::None);
    CHECK(independent_set_invalid_reason(g, VertexSet({0, 1})) == InvalidReason::MissingEdge);
}

TEST_CASE("independence oracle frozen values") {
    CHECK(independence_number(Graph::complete(7)) == 1);
    CHECK(independence_number(Graph::cycle_graph(7)) == 3);
    CHECK(independence_number(petersen()) == 4);
    auto mis = max_independent_set(petersen());
    CHECK(mis.size() == 4);
    CHECK(verify_certificate_part(petersen(), VertexSet(mis)));
    CHECK_THROWS_AS(independence_number(Graph(61)), SizeCapExceeded);
}

TEST_CASE("independence solver matches subset enumeration") {
    Rng rng(2024);
    for (int t = 0; t < 40; ++t) {
        int n = rng.range(1, 12);
        Graph g = random_graph(n, rng.range(10, 90), rng);
        CHECK(independence_number(g) == alpha_by_subsets(g));
    }
}

TEST_CASE("path order oracle frozen values") {
    CHECK(all_path_orders(Graph::cycle_graph(5), 0, 1) == std::set<int>{2, 5});
    CHECK(all_path_orders(Graph::complete(4), 0, 1) == std::set<int>{2, 3, 4});
    CHECK(all_path_orders(Graph::cycle_graph(6), 0, 3) == std::set<int>{4});
    CHECK_THROWS_AS(all_path_orders(Graph::complete(3), 1, 1), Error);
    CHECK_THROWS_AS(all_path_orders(Graph(17), 0, 1), SizeCapExceeded);
}

TEST_CASE("cycle order oracle frozen values") {
    CHECK(all_cycle_orders(Graph::complete(5)) == std::set<int>{3, 4, 5});
    CHECK(all_cycle_orders(Graph::cycle_graph(6)) == std::set<int>{6});
    Graph two_k4(8);
    for (int c = 0; c < 2; ++c)
        for (int u = 4 * c; u < 4 * c + 4; ++u)
            for (int v = u + 1; v < 4 * c + 4; ++v) two_k4.add_edge(u, v);
    CHECK(all_cycle_orders(two_k4) == std::set<int>{3, 4});
    CHECK(all_cycle_orders(petersen()) == std::set<int>{5, 6, 8, 9});
    CHECK_THROWS_AS(all_cycle_orders(Graph(17)), SizeCapExceeded);
}

TEST_CASE("edge list round trip and validation") {
    Graph g = petersen();
    std::string text = to_edge_list(g);
    CHECK(graph_from_edge_list(text) == g);
    CHECK_THROWS_AS(graph_from_edge_list("not a graph"), ParseError);
    CHECK_THROWS_AS(graph_from_edge_list("2 1\n0 2\n"), ParseError);  // label out of range
    CHECK_THROWS_AS(graph_from_edge_list("2 2\n0 1\n"), ParseError);  // wrong edge count
}

TEST_CASE("graph6 round trip and frozen value") {
    CHECK(to_graph6(Graph::complete(3)) == "Bw");
    CHECK(from_graph6("Bw") == Graph::complete(3));
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng.range(1, 20), rng.range(0, 100), rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    CHECK_THROWS_AS(from_graph6("B\x01"), ParseError);
}

TEST_CASE("rng matches the documented update rule") {
    // Reference outputs of the documented recurrence for seed 0.
    Rng rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(42);
    for (int i = 0; i < 200; ++i) {
        int x = c.range(3, 9);
        CHECK(x >= 3);
        CHECK(x <= 9);
    }
}

TEST_CASE("components and block decomposition") {
    Graph g(7);
    // bowtie on 0..4 with cut vertex 2, plus an isolated edge 5-6
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(2, 4);
    g.add_edge(5, 6);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(comps[1] == std::vector<Vertex>{5, 6});
    CHECK_FALSE(is_connected(g));
    CHECK_THROWS_AS(block_decomposition(g), DisconnectedInput);

    Graph bow = g.induced({0, 1, 2, 3, 4});
    auto bd = block_decomposition(bow);
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.cutvertices.members == std::vector<Vertex>{2});
    CHECK(bd.endblock == std::vector<bool>{true, true});
    CHECK_FALSE(is_two_connected(bow));
    CHECK(is_two_connected(Graph::cycle_graph(5)));
    CHECK_FALSE(is_two_connected(Graph::complete(2)));
}
