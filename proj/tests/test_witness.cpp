#include "doctest.h"

#include "cycert/blocks.hpp"
#include "cycert/checks.hpp"
#include "cycert/gen.hpp"
#include "cycert/oracles.hpp"
#include "cycert/witness.hpp"

using namespace cycert;

TEST_CASE("extremal graph structure") {
    Graph g = extremal_graph(4, 3);
    CHECK(g.order() == 12);
    CHECK(independence_number(g) == 3);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    for (const auto& c : comps) {
        CHECK(c.size() == 4);
        Graph h = g.induced(c);
        CHECK(h.edge_count() == 6);  // complete
    }
    CHECK_THROWS_AS(extremal_graph(2, 1), HypothesisViolated);
    CHECK_THROWS_AS(extremal_graph(4, 0), HypothesisViolated);
}

TEST_CASE("witness on a complete graph returns the long cycle") {
    Graph g = Graph::complete(9);
    Certificate c = ramsey_witness(g, 4, 2);
    REQUIRE(c.kind == OutcomeKind::CycleFound);
    CHECK(c.cycle.order() == 5);
    CHECK(verify_certificate(g, c));
}

TEST_CASE("witness finds the independent set when one exists") {
    Graph ex = extremal_graph(4, 2);
    Graph g(9);  // extremal graph plus one isolated vertex
    for (auto [u, v] : ex.edges()) g.add_edge(u, v);
    Certificate c = ramsey_witness(g, 4, 2);
    REQUIRE(c.kind == OutcomeKind::IndependentSetFound);
    CHECK(c.independent_set.size() == 3);
    CHECK(verify_certificate(g, c));
}

TEST_CASE("witness on clique unions with cross edges") {
    Rng rng(501);
    for (int t = 0; t < 15; ++t) {
        Graph g = clique_union_cross({4, 5}, rng.range(0, 12), rng.next());
        Certificate c = ramsey_witness(g, 4, 2);
        CHECK(verify_certificate(g, c));
        if (c.kind == OutcomeKind::CycleFound) CHECK(c.cycle.order() == 5);
        if (c.kind == OutcomeKind::IndependentSetFound) CHECK(c.independent_set.size() == 3);
        CHECK(c.kind != OutcomeKind::Failure);
    }
}

TEST_CASE("witness on larger clique unions") {
    Rng rng(77);
    for (int t = 0; t < 5; ++t) {
        Graph g = clique_union_cross({7, 8}, rng.range(0, 15), rng.next());
        Certificate c = ramsey_witness(g, 7, 2);
        CHECK(verify_certificate(g, c));
        CHECK(c.kind != OutcomeKind::Failure);
    }
}

TEST_CASE("witness rejects undersized or malformed parameters") {
    CHECK_THROWS_AS(ramsey_witness(Graph::complete(8), 4, 2), HypothesisViolated);
    CHECK_THROWS_AS(ramsey_witness(Graph::complete(5), 2, 1), HypothesisViolated);
    CHECK_THROWS_AS(ramsey_witness(Graph::complete(5), 4, 0), HypothesisViolated);
}

TEST_CASE("certificate verification rejects corrupted witnesses") {
    Graph g = Graph::complete(9);
    Certificate c = ramsey_witness(g, 4, 2);
    REQUIRE(c.kind == OutcomeKind::CycleFound);

    Certificate wrong_order = c;
    wrong_order.cycle.vertices.pop_back();
    CHECK_FALSE(verify_certificate(g, wrong_order));

    Certificate repeated = c;
    repeated.cycle.vertices.back() = repeated.cycle.vertices.front();
    CHECK_FALSE(verify_certificate(g, repeated));

    Certificate failure;
    failure.kind = OutcomeKind::Failure;
    CHECK_FALSE(verify_certificate(g, failure));

    Certificate not_independent;
    not_independent.kind = OutcomeKind::IndependentSetFound;
    not_independent.r = 1;
    not_independent.independent_set = VertexSet({0, 1});
    CHECK_FALSE(verify_certificate(g, not_independent));
}

TEST_CASE("certificate json has the documented shape") {
    Graph g = Graph::complete(9);
    Certificate c = ramsey_witness(g, 4, 2);
    nlohmann::json j = certificate_to_json(c);
    CHECK(j["schema_version"] == kCertificateSchemaVersion);
    CHECK(j["kind"] == "cycle");
    CHECK(j["p"] == 4);
    CHECK(j["r"] == 2);
    CHECK(j["cycle"].size() == 5);
    CHECK(j["trace"].is_array());
    for (const auto& t : j["trace"]) {
        CHECK(t.contains("case"));
        CHECK(t.contains("lemma"));
        CHECK(t.contains("params"));
        CHECK(t.contains("output_order"));
    }

    Certificate fail;
    fail.kind = OutcomeKind::Failure;
    fail.message = "because";
    nlohmann::json jf = certificate_to_json(fail);
    CHECK(jf["kind"] == "failure");
    CHECK(jf["message"] == "because");
}

TEST_CASE("lemma replay harness smoke run") {
    for (const std::string& lemma : lemma_names()) {
        CheckResult res = run_lemma_check(lemma, 5, 424242, 0);
        INFO(lemma << ": " << res.message);
        CHECK(res.trials >= 5);
        CHECK(res.failures == 0);
    }
    CHECK_THROWS_AS(run_lemma_check("nope", 5, 1, 0), ParseError);
}
