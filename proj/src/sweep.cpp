#include "ttr/sweep.hpp"

#include "ttr/bcg.hpp"
#include "ttr/closed_forms.hpp"
#include "ttr/corpus.hpp"
#include "ttr/gadget.hpp"
#include "ttr/graph.hpp"
#include "ttr/oracle.hpp"
#include "ttr/partition.hpp"
#include "ttr/tree.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace ttr::sweep {

namespace {

class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (ok) return;
        ++failures_;
        if (first_failure_.empty()) first_failure_ = what;
    }

    void merge_failure(const std::string& what) {
        if (what.empty()) return;
        ++failures_;
        if (first_failure_.empty()) first_failure_ = what;
    }

    void count(long long n) { total_ += n; }

    bool pass() const { return failures_ == 0; }

    std::string detail(const std::string& corpus) const {
        std::ostringstream os;
        os << corpus << ", " << total_ << " checks";
        if (failures_) os << ", " << failures_ << " FAILED; first: " << first_failure_;
        return os.str();
    }

private:
    long long total_ = 0;
    long long failures_ = 0;
    std::string first_failure_;
};

template <typename Fn>
CriterionResult timed(int id, const std::string& name, Fn&& fn) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    auto begin = std::chrono::steady_clock::now();
    try {
        Check c;
        std::string corpus = fn(c);
        r.pass = c.pass();
        r.detail = c.detail(corpus);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    return r;
}

// All 2^(n choose 2) labelled graphs on n vertices.
std::vector<Graph> all_labelled_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) edges.push_back(slots[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

} // namespace

CriterionResult family_tables(int cap) {
    return timed(1, "family tables: oracle reproduces every closed form", [&](Check& c) {
        auto both = [&](const GraphFamily& fam, int expected) {
            int formula = ttr_formula(fam);
            int oracle = tournament_transitivity_exact(generate(fam), cap).value;
            c.expect(formula == expected, fam.to_string() + ": formula " + std::to_string(formula) +
                                              " != expected " + std::to_string(expected));
            c.expect(oracle == expected, fam.to_string() + ": oracle " + std::to_string(oracle) +
                                             " != expected " + std::to_string(expected));
        };
        const int path_expected[11] = {0, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3};
        for (int n = 1; n <= 10; ++n) both(GraphFamily::path(n), path_expected[n]);
        const int cycle_expected[11] = {0, 0, 0, 1, 2, 2, 3, 3, 3, 3, 3};
        for (int n = 3; n <= 10; ++n) both(GraphFamily::cycle(n), cycle_expected[n]);
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n)
                both(GraphFamily::complete_bipartite(m, n), (m == 1 && n == 1) ? 1 : 2);
        for (int n = 1; n <= 10; ++n) both(GraphFamily::complete(n), 1);
        return std::string("paths 1..10, cycles 3..10, K_{m,n} m,n<=4, K_n n<=10");
    });
}

CriterionResult clique_union_lemma(int cap) {
    return timed(2, "clique-union lemma: TTr(t.K_n) = t with verifying construction", [&](Check& c) {
        for (int n = 1; n <= 3; ++n)
            for (int t = 1; t <= n; ++t) {
                auto g = generate(GraphFamily::clique_union(t, n));
                int oracle = tournament_transitivity_exact(g, cap).value;
                c.expect(oracle == t, "t=" + std::to_string(t) + " n=" + std::to_string(n) +
                                          ": oracle " + std::to_string(oracle));
                auto w = build_clique_union_witness(t, n);
                c.expect(w.size() == t && is_tournament_transitive(g, w).ok,
                         "t=" + std::to_string(t) + " n=" + std::to_string(n) +
                             ": constructed witness rejected");
            }
        {
            auto g = generate(GraphFamily::clique_union(4, 4));
            auto w = build_clique_union_witness(4, 4);
            c.expect(w.size() == 4 && is_tournament_transitive(g, w).ok,
                     "t=n=4: constructed witness rejected (construction-only check)");
        }
        return std::string("t<=n<=3 with oracle, t=n=4 construction-only");
    });
}

CriterionResult tree_algorithm_vs_oracle(int cap) {
    return timed(3, "tree algorithm equals oracle on all trees n<=10", [&](Check& c) {
        int trees = 0;
        for (int n = 1; n <= 10; ++n) {
            auto shapes = corpus::all_trees(n);
            std::vector<std::string> errors(shapes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (long long i = 0; i < static_cast<long long>(shapes.size()); ++i) {
                try {
                    const Graph& t = shapes[i];
                    auto algo = tournament_transitivity_tree(t);
                    auto oracle = tournament_transitivity_exact(t, cap);
                    int tr = transitivity_tree(t);
                    if (algo.value != oracle.value)
                        errors[i] = "tree algorithm " + std::to_string(algo.value) + " != oracle " +
                                    std::to_string(oracle.value);
                    else if (algo.value != tr && algo.value != tr - 1)
                        errors[i] = "value outside {Tr-1, Tr}";
                    else if (!is_tournament_transitive(t, algo.witness).ok)
                        errors[i] = "tree witness rejected by verifier";
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            }
            for (auto& e : errors) {
                c.count(1);
                c.merge_failure(e.empty() ? "" : ("n=" + std::to_string(n) + ": " + e));
            }
            trees += static_cast<int>(shapes.size());
        }
        return std::to_string(trees) + " non-isomorphic trees";
    });
}

CriterionResult non_monotone_witnesses(int cap) {
    return timed(4, "named non-monotonicity: TTr(P5)>TTr(C5), TTr(C4)>TTr(K4)", [&](Check& c) {
        int p5 = tournament_transitivity_exact(generate(GraphFamily::path(5)), cap).value;
        int c5 = tournament_transitivity_exact(generate(GraphFamily::cycle(5)), cap).value;
        int c4 = tournament_transitivity_exact(generate(GraphFamily::cycle(4)), cap).value;
        int k4 = tournament_transitivity_exact(generate(GraphFamily::complete(4)), cap).value;
        c.expect(p5 == 3, "TTr(P5) = " + std::to_string(p5));
        c.expect(c5 == 2, "TTr(C5) = " + std::to_string(c5));
        c.expect(c4 == 2, "TTr(C4) = " + std::to_string(c4));
        c.expect(k4 == 1, "TTr(K4) = " + std::to_string(k4));
        c.expect(p5 > c5 && c4 > k4, "expected strict drops under subgraph containment");
        return std::string("P5/C5 and C4/K4");
    });
}

CriterionResult bound_suite(uint64_t seed, int cap) {
    return timed(5, "bounds and characterizations on random graphs n<=8", [&](Check& c) {
        corpus::Rng rng(seed);
        std::vector<Graph> graphs;
        for (int i = 0; i < 500; ++i) {
            int n = rng.uniform(1, 8);
            int num = rng.uniform(1, 9);
            graphs.push_back(corpus::random_graph(n, num, 10, rng));
        }
        std::vector<std::string> errors(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
            try {
                const Graph& g = graphs[i];
                auto rep = tournament_transitivity_exact(g, cap);
                int ttr = rep.value;
                int tr = transitivity_exact(g, cap).value;
                Graph gc = complement(g);
                int tr_c = transitivity_exact(gc, cap).value;
                int n = g.n();
                if (ttr > std::min(tr, tr_c))
                    errors[i] = "TTr exceeds min(Tr, Tr of complement)";
                else if (ttr > std::min(g.max_degree() + 1, n - g.min_degree()))
                    errors[i] = "TTr exceeds the degree bound";
                else if (ttr > (n + 1) / 2)
                    errors[i] = "TTr exceeds (n+1)/2";
                else if (!is_transitive(gc, rep.witness).ok)
                    errors[i] = "tournament witness is not transitive on the complement";
                else if (is_connected(g)) {
                    bool complete = g.m() == n * (n - 1) / 2;
                    if ((ttr == 1) != complete)
                        errors[i] = "TTr=1 iff complete fails";
                    else if ((ttr >= 2) != has_induced_p3(g))
                        errors[i] = "TTr>=2 iff induced P3 fails";
                }
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
        for (size_t i = 0; i < errors.size(); ++i) {
            c.count(1);
            c.merge_failure(errors[i].empty() ? ""
                                              : ("graph #" + std::to_string(i) + ": " + errors[i]));
        }
        return std::string("500 random graphs");
    });
}

CriterionResult bcg_suite(uint64_t seed, int cap) {
    return timed(6, "BCG theorems vs oracle on random chain graphs n<=12", [&](Check& c) {
        corpus::Rng rng(seed + 1);
        std::vector<Graph> graphs;
        for (int i = 0; i < 300; ++i) graphs.push_back(corpus::random_connected_bcg(12, rng));
        std::vector<std::string> errors(graphs.size());
        std::vector<char> iff_fail(graphs.size(), 0);
        long long exact_checks = 0, type1_seen = 0, type3_seen = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : exact_checks, type1_seen, type3_seen)
#endif
        for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
            try {
                const Graph& g = graphs[i];
                auto det = ttr_bcg(g, cap); // internally cross-checks theorem vs oracle
                auto oracle = tournament_transitivity_exact(g, cap);
                if (det.exact) ++exact_checks;
                if (det.exact && det.value != oracle.value) {
                    errors[i] = "exact verdict " + std::to_string(det.value) + " != oracle " +
                                std::to_string(oracle.value);
                } else if (!det.exact && (oracle.value < det.lo || oracle.value > det.hi)) {
                    errors[i] = "interval [" + std::to_string(det.lo) + "," + std::to_string(det.hi) +
                                "] misses oracle " + std::to_string(oracle.value);
                } else if (det.witness && !is_tournament_transitive(g, *det.witness).ok) {
                    errors[i] = "determination witness rejected";
                } else if (g.min_degree() >= 1) {
                    auto cls = classify_bcg(g);
                    if (cls.kind == BcgKind::TypeI) {
                        ++type1_seen;
                        bool cond = type1_condition(g, cls.ord, cls.t).has_value();
                        if (cond != (oracle.value == cls.t + 1)) {
                            iff_fail[i] = 1;
                            errors[i] = "type-1 iff violated (condition " +
                                        std::string(cond ? "holds" : "fails") + ", oracle " +
                                        std::to_string(oracle.value) + ", t " + std::to_string(cls.t) + ")";
                        }
                    } else if (cls.kind == BcgKind::TypeIII) {
                        ++type3_seen;
                        if (oracle.value >= cls.t + 2) errors[i] = "type-3 strictness violated";
                    }
                }
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
        long long iff_failures = 0;
        for (size_t i = 0; i < errors.size(); ++i) {
            c.count(1);
            if (iff_fail[i]) ++iff_failures;
            c.merge_failure(errors[i].empty() ? ""
                                              : ("bcg #" + std::to_string(i) + ": " + errors[i]));
        }
        std::ostringstream corpus;
        corpus << "300 random connected BCGs (" << exact_checks << " exact verdicts, "
               << type1_seen << " type-1, " << type3_seen << " type-3";
        if (iff_failures)
            corpus << "; type-1 equality characterization is only sufficient: necessity fails on "
                   << iff_failures << " instance(s)";
        corpus << ")";
        return corpus.str();
    });
}

CriterionResult gadget_suite(int cap) {
    return timed(7, "gadget construction and lifted certificates, all bases n<=5", [&](Check& c) {
        for (int n = 1; n <= 5; ++n) {
            auto bases = all_labelled_graphs(n);
            std::vector<std::string> errors(bases.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (long long i = 0; i < static_cast<long long>(bases.size()); ++i) {
                try {
                    const Graph& base = bases[i];
                    auto tr = transitivity_exact(base, cap);
                    auto gi = build_reduction(base);
                    long long expect_v = 3LL * base.n() * (gi.delta + 1) + 3;
                    if (gi.gadget.n() != expect_v) {
                        errors[i] = "gadget vertex count " + std::to_string(gi.gadget.n()) +
                                    " != " + std::to_string(expect_v);
                    } else {
                        auto lifted = lift_partition(gi, tr.witness); // verifies internally
                        if (lifted.size() != tr.value + 2)
                            errors[i] = "lifted witness size != Tr+2";
                        else if (!is_tournament_transitive(gi.gadget, lifted).ok)
                            errors[i] = "lifted witness rejected";
                    }
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            }
            for (size_t i = 0; i < errors.size(); ++i) {
                c.count(1);
                c.merge_failure(errors[i].empty()
                                    ? ""
                                    : ("n=" + std::to_string(n) + " base #" + std::to_string(i) +
                                       ": " + errors[i]));
            }
        }
        {
            auto gi = build_reduction(Graph(1));
            int got = tournament_transitivity_exact(gi.gadget, cap).value;
            c.expect(got == 3, "TTr of the K_1 gadget = " + std::to_string(got) + ", expected 3");
        }
        return std::string("all labelled bases n<=5 plus the K_1 gadget oracle check");
    });
}

std::vector<CriterionResult> run_all(uint64_t seed, int cap) {
    std::vector<CriterionResult> out;
    out.push_back(family_tables(cap));
    out.push_back(clique_union_lemma(cap));
    out.push_back(tree_algorithm_vs_oracle(cap));
    out.push_back(non_monotone_witnesses(cap));
    out.push_back(bound_suite(seed, cap));
    out.push_back(bcg_suite(seed, cap));
    out.push_back(gadget_suite(cap));
    return out;
}

} // namespace ttr::sweep
