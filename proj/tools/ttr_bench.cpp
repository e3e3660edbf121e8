// Compares the serial reference kernels against the OpenMP-parallel ones:
// the per-vertex rerooting profile, the full tree decision procedure, and a
// batch oracle sweep. Values must agree exactly; only the wall time differs.

#include "ttr/corpus.hpp"
#include "ttr/graph.hpp"
#include "ttr/oracle.hpp"
#include "ttr/tree.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename Fn>
double time_of(Fn&& fn) {
    double begin = now();
    fn();
    return now() - begin;
}

void row(const char* name, int n, double serial, double parallel, bool agree) {
    std::printf("%-34s n=%-6d serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, n,
                serial, parallel, parallel > 0 ? serial / parallel : 0.0,
                agree ? "values agree" : "VALUES DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    int tree_n = argc > 1 ? std::atoi(argv[1]) : 2500;
    int batch = argc > 2 ? std::atoi(argv[2]) : 400;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel entry points fall back to serial\n\n");
#endif

    ttr::corpus::Rng rng(2024);

    { // rerooting profile kernel
        auto t = ttr::corpus::random_tree(tree_n, rng);
        ttr::TransitiveProfile serial_prof, parallel_prof;
        double ts = time_of([&] { serial_prof = ttr::transitive_profile_serial(t); });
        double tp = time_of([&] { parallel_prof = ttr::transitive_profile(t); });
        row("transitive profile (rerooting)", tree_n, ts, tp,
            serial_prof.values == parallel_prof.values);
    }

    { // full decision procedure, values only
        auto t = ttr::corpus::random_tree(tree_n, rng);
        ttr::SolveReport rs, rp;
        double ts = time_of([&] { rs = ttr::tournament_transitivity_tree_serial(t, false); });
        double tp = time_of([&] { rp = ttr::tournament_transitivity_tree(t, false); });
        row("tree decision (pair scan)", tree_n, ts, tp,
            rs.value == rp.value && rs.nodes_explored == rp.nodes_explored);
    }

    { // oracle over a batch of random graphs, corpus-level parallelism
        std::vector<ttr::Graph> graphs;
        for (int i = 0; i < batch; ++i) graphs.push_back(ttr::corpus::random_graph(8, 1, 2, rng));
        std::vector<int> serial_vals(batch), parallel_vals(batch);
        double ts = time_of([&] {
            for (int i = 0; i < batch; ++i)
                serial_vals[i] = ttr::tournament_transitivity_exact(graphs[i]).value;
        });
        double tp = time_of([&] {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (int i = 0; i < batch; ++i)
                parallel_vals[i] = ttr::tournament_transitivity_exact(graphs[i]).value;
        });
        row("oracle batch (n=8 graphs)", batch, ts, tp, serial_vals == parallel_vals);
    }

    return 0;
}
