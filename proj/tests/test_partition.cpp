#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttr/corpus.hpp"
#include "ttr/graph.hpp"
#include "ttr/oracle.hpp"
#include "ttr/partition.hpp"

using namespace ttr;

namespace {
const Graph p3 = generate(GraphFamily::path(3));
const Graph p5 = generate(GraphFamily::path(5));
// the P_5 witness: V_1 = {v2, v5}, V_2 = {v1, v3}, V_3 = {v4}
const OrderedPartition p5_witness{{{1, 4}, {0, 2}, {3}}};
} // namespace

TEST_CASE("dominates") {
    CHECK(dominates(p3, {1}, {0, 2}));
    CHECK(!dominates(p3, {0}, {2}));
    CHECK(dominates(p3, {0, 2}, {1}));
    CHECK_THROWS_AS(dominates(p3, {0, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(dominates(p3, {}, {1}), std::invalid_argument);
}

TEST_CASE("is_transitive") {
    for (int n = 2; n <= 5; ++n) {
        Graph kn = generate(GraphFamily::complete(n));
        OrderedPartition singletons;
        for (int v = n - 1; v >= 0; --v) singletons.parts.push_back({v});
        CHECK(is_transitive(kn, singletons).ok);
    }

    auto bad = is_transitive(p3, OrderedPartition{{{0}, {2}, {1}}});
    REQUIRE(!bad.ok);
    CHECK(bad.first_violation->i == 1);
    CHECK(bad.first_violation->j == 2);
    CHECK(bad.first_violation->kind == ViolationKind::MissingDomination);
    CHECK(bad.first_violation->witness == 2);

    OrderedPartition whole{{{0, 1, 2}}};
    CHECK(is_transitive(p3, whole).ok);

    CHECK_THROWS_AS(is_transitive(p3, OrderedPartition{{{0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(is_transitive(p3, OrderedPartition{{{0, 1}, {1, 2}}}), std::invalid_argument);
}

TEST_CASE("is_tournament_transitive") {
    CHECK(is_tournament_transitive(p5, p5_witness).ok);

    Graph k4 = generate(GraphFamily::complete(4));
    auto rep = is_tournament_transitive(k4, OrderedPartition{{{0}, {1}, {2}, {3}}});
    REQUIRE(!rep.ok);
    CHECK(rep.first_violation->i == 1);
    CHECK(rep.first_violation->j == 2);
    CHECK(rep.first_violation->kind == ViolationKind::ForbiddenBackDomination);

    // merging two middle sets of a valid witness need not stay tournament
    // transitive: here V_2 u V_3 dominates V_1
    OrderedPartition merged_middle{{{1, 4}, {0, 2, 3}}};
    CHECK(is_transitive(p5, merged_middle).ok);
    CHECK(!is_tournament_transitive(p5, merged_middle).ok);
}

TEST_CASE("merge_first_two and shrink_to") {
    auto merged = merge_first_two(p5_witness);
    REQUIRE(merged.size() == 2);
    CHECK(merged.parts[0] == VertexSet{0, 1, 2, 4});
    CHECK(is_tournament_transitive(p5, merged).ok);

    auto one = shrink_to(p5_witness, 1);
    CHECK(one.size() == 1);
    CHECK(one.parts[0] == VertexSet{0, 1, 2, 3, 4});

    CHECK(shrink_to(p5_witness, 3) == p5_witness);
    CHECK_THROWS_AS(shrink_to(p5_witness, 4), std::invalid_argument);
    CHECK_THROWS_AS(merge_first_two(one), std::invalid_argument);
}

TEST_CASE("partition text format") {
    std::string text = write_partition(p5_witness);
    CHECK(text == "1 4\n0 2\n3\n");
    CHECK(parse_partition(text) == p5_witness);
    CHECK_THROWS_AS(parse_partition(""), std::runtime_error);
    CHECK_THROWS_AS(parse_partition("1 x\n"), std::runtime_error);
}

TEST_CASE("tournament witnesses stay transitive, also on the complement") {
    corpus::Rng rng(23);
    int tested = 0;
    for (int iter = 0; iter < 60; ++iter) {
        Graph g = corpus::random_graph(rng.uniform(1, 8), rng.uniform(2, 8), 10, rng);
        auto rep = tournament_transitivity_exact(g);
        REQUIRE(is_tournament_transitive(g, rep.witness).ok);
        CHECK(is_transitive(g, rep.witness).ok);
        CHECK(is_transitive(complement(g), rep.witness).ok);
        if (rep.value >= 2) {
            ++tested;
            // every merge step preserves tournament transitivity
            for (int j = rep.value - 1; j >= 1; --j)
                CHECK(is_tournament_transitive(g, shrink_to(rep.witness, j)).ok);
            // order matters: the reversed witness must fail
            OrderedPartition reversed;
            for (int i = rep.value - 1; i >= 0; --i) reversed.parts.push_back(rep.witness.parts[i]);
            CHECK(!is_tournament_transitive(g, reversed).ok);
        }
    }
    CHECK(tested > 10);
}
