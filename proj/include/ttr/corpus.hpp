#ifndef TTR_CORPUS_HPP
#define TTR_CORPUS_HPP

#include "ttr/graph.hpp"

#include <cstdint>
#include <vector>

namespace ttr::corpus {

/// splitmix64; deterministic across platforms, unlike the std distributions.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] (inclusive).
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    bool chance(int num, int den) { return uniform(1, den) <= num; }
};

/// All non-isomorphic free trees on n vertices (1 per isomorphism class).
std::vector<Graph> all_trees(int n);

/// G(n, p) with p = num/den per pair.
Graph random_graph(int n, int num, int den, Rng& rng);

/// Uniform labelled tree from a random Pruefer sequence.
Graph random_tree(int n, Rng& rng);

/// Connected bipartite chain graph with randomly relabelled vertices,
/// n1 + n2 <= max_n vertices.
Graph random_connected_bcg(int max_n, Rng& rng);

} // namespace ttr::corpus

#endif
