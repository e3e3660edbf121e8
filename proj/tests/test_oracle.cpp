#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "ttr/corpus.hpp"
#include "ttr/graph.hpp"
#include "ttr/oracle.hpp"
#include "ttr/partition.hpp"

using namespace ttr;

TEST_CASE("bounds_ttr") {
    auto k5 = bounds_ttr(generate(GraphFamily::complete(5)));
    CHECK(k5 == std::pair<int, int>{1, 1});
    auto p5 = bounds_ttr(generate(GraphFamily::path(5)));
    CHECK(p5 == std::pair<int, int>{2, 3});
    auto c4 = bounds_ttr(generate(GraphFamily::cycle(4)));
    CHECK(c4 == std::pair<int, int>{2, 2});
    auto k1 = bounds_ttr(Graph(1));
    CHECK(k1 == std::pair<int, int>{1, 1});
    // disconnected: the lower bound is the best over components
    auto two_k2 = bounds_ttr(generate(GraphFamily::clique_union(2, 2)));
    CHECK(two_k2 == std::pair<int, int>{1, 2});
    auto p5_and_k3 =
        bounds_ttr(disjoint_union({generate(GraphFamily::path(5)), generate(GraphFamily::complete(3))}).graph);
    CHECK(p5_and_k3.first == 2);
}

TEST_CASE("transitivity on named graphs") {
    CHECK(transitivity_exact(generate(GraphFamily::complete(4))).value == 4);
    CHECK(transitivity_exact(generate(GraphFamily::complete_bipartite(3, 2))).value == 3);
    CHECK(transitivity_exact(generate(GraphFamily::path(4))).value == 3);
}

TEST_CASE("tournament transitivity on named graphs") {
    CHECK(tournament_transitivity_exact(generate(GraphFamily::path(5))).value == 3);
    CHECK(tournament_transitivity_exact(generate(GraphFamily::cycle(5))).value == 2);
    CHECK(tournament_transitivity_exact(generate(GraphFamily::complete_bipartite(2, 3))).value == 2);
}

TEST_CASE("cap is enforced") {
    Graph big = generate(GraphFamily::path(13));
    CHECK_THROWS_WITH_AS(transitivity_exact(big), doctest::Contains("cap"), std::runtime_error);
    CHECK_THROWS_AS(tournament_transitivity_exact(big, 12), std::runtime_error);
    CHECK(tournament_transitivity_exact(big, 13).value == 3);
}

TEST_CASE("oracle against plain enumeration") {
    corpus::Rng rng(41);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = corpus::random_graph(rng.uniform(1, 6), rng.uniform(2, 8), 10, rng);
        CAPTURE(write_edge_list(g));
        CHECK(transitivity_exact(g).value == brute::max_k(g, false));
        CHECK(tournament_transitivity_exact(g).value == brute::max_k(g, true));
    }
    for (auto fam : {GraphFamily::path(6), GraphFamily::cycle(6), GraphFamily::complete(5),
                     GraphFamily::complete_bipartite(2, 3), GraphFamily::star(4),
                     GraphFamily::clique_union(2, 3)}) {
        Graph g = generate(fam);
        CHECK(transitivity_exact(g).value == brute::max_k(g, false));
        CHECK(tournament_transitivity_exact(g).value == brute::max_k(g, true));
    }
    for (int iter = 0; iter < 8; ++iter) { // a little margin at n = 7
        Graph g = corpus::random_graph(7, rng.uniform(2, 8), 10, rng);
        CHECK(tournament_transitivity_exact(g).value == brute::max_k(g, true));
    }
}

TEST_CASE("transitive_number_exact") {
    Graph p5 = generate(GraphFamily::path(5));
    CHECK(transitive_number_exact(p5, 2) == 3);
    Graph star = generate(GraphFamily::star(3));
    CHECK(transitive_number_exact(star, 1) == 2); // a leaf can sit in V_2
    CHECK(transitive_number_exact(Graph(1), 0) == 1);

    corpus::Rng rng(43);
    for (int iter = 0; iter < 25; ++iter) {
        Graph g = corpus::random_graph(rng.uniform(1, 5), 1, 2, rng);
        for (int v = 0; v < g.n(); ++v) CHECK(transitive_number_exact(g, v) == brute::transitive_number(g, v));
    }
}

TEST_CASE("normal form witness") {
    Graph p5 = generate(GraphFamily::path(5));
    auto w = normal_form_witness(p5);
    REQUIRE(w.size() == 3);
    CHECK(is_tournament_transitive(p5, w).ok);
    CHECK(w.parts[2].size() == 1);
    CHECK(w.parts[1].size() == 2);
    int z = w.parts[2][0];
    int adjacent = 0;
    for (int x : w.parts[1])
        if (p5.has_edge(x, z)) ++adjacent;
    CHECK(adjacent == 1);

    Graph p6 = generate(GraphFamily::path(6));
    CHECK(normal_form_witness(p6).size() == 3);

    CHECK_THROWS_AS(normal_form_witness(generate(GraphFamily::complete(4))), std::invalid_argument);
    CHECK_THROWS_AS(normal_form_witness(generate(GraphFamily::clique_union(2, 2))),
                    std::invalid_argument); // disconnected

    // every connected graph with TTr >= 3 in a small sample admits the form
    corpus::Rng rng(47);
    int found = 0;
    for (int iter = 0; iter < 300 && found < 8; ++iter) {
        Graph g = corpus::random_graph(rng.uniform(5, 8), rng.uniform(3, 6), 10, rng);
        if (!is_connected(g)) continue;
        if (tournament_transitivity_exact(g).value < 3) continue;
        ++found;
        auto nf = normal_form_witness(g);
        CHECK(is_tournament_transitive(g, nf).ok);
        CHECK(nf.parts.back().size() == 1);
        CHECK(nf.parts[nf.size() - 2].size() == 2);
    }
    CHECK(found > 0);
}

TEST_CASE("oracle invariants on a random corpus") {
    corpus::Rng rng(53);
    for (int iter = 0; iter < 120; ++iter) {
        Graph g = corpus::random_graph(rng.uniform(1, 8), rng.uniform(1, 9), 10, rng);
        auto ttr = tournament_transitivity_exact(g);
        auto tr = transitivity_exact(g);
        auto [lo, hi] = bounds_ttr(g);
        CHECK(ttr.value <= tr.value);
        CHECK(ttr.value >= lo);
        CHECK(ttr.value <= hi);
        CHECK(is_tournament_transitive(g, ttr.witness).ok);
        CHECK(is_transitive(g, tr.witness).ok);

        // monotone under induced subgraphs
        if (g.n() >= 2) {
            VertexSet s;
            for (int v = 0; v < g.n(); ++v)
                if (rng.chance(2, 3)) s.push_back(v);
            if (!s.empty()) {
                Graph h = induced_subgraph(g, s).graph;
                CHECK(tournament_transitivity_exact(h).value <= ttr.value);
            }
        }

        // disconnected lower bound
        auto comps = connected_components(g);
        if (comps.size() > 1) {
            int best = 0;
            for (const auto& comp : comps)
                best = std::max(best,
                                tournament_transitivity_exact(induced_subgraph(g, comp).graph).value);
            CHECK(ttr.value >= best);
        }
    }
}

TEST_CASE("search is deterministic") {
    Graph g = generate(GraphFamily::cycle(7));
    auto a = tournament_transitivity_exact(g);
    auto b = tournament_transitivity_exact(g);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes_explored > 0);
}
