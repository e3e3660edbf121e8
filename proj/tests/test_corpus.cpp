#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttr/bcg.hpp"
#include "ttr/corpus.hpp"
#include "ttr/graph.hpp"

using namespace ttr;

TEST_CASE("free tree enumeration matches the known counts") {
    const int expected[11] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        auto trees = corpus::all_trees(n);
        CHECK(static_cast<int>(trees.size()) == expected[n]);
        for (const auto& t : trees) {
            CHECK(t.n() == n);
            CHECK(is_tree(t));
        }
    }
}

TEST_CASE("random generators are deterministic and well-formed") {
    corpus::Rng a(5), b(5);
    CHECK(corpus::random_graph(8, 1, 2, a) == corpus::random_graph(8, 1, 2, b));

    corpus::Rng rng(9);
    for (int iter = 0; iter < 30; ++iter) {
        CHECK(is_tree(corpus::random_tree(rng.uniform(1, 40), rng)));
        Graph g = corpus::random_connected_bcg(12, rng);
        CHECK(is_connected(g));
        CHECK_NOTHROW(chain_ordering(g));
    }
}
