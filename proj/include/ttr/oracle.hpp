#ifndef TTR_ORACLE_HPP
#define TTR_ORACLE_HPP

#include "ttr/graph.hpp"
#include "ttr/partition.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace ttr {

inline constexpr int kDefaultOracleCap = 12;

enum class SolveMethod { Oracle, ClosedForm, TreeAlgorithm, BcgTheorem };

std::string to_string(SolveMethod m);

struct SolveReport {
    int value = 1;
    OrderedPartition witness;
    SolveMethod method = SolveMethod::Oracle;
    int lower = 1;
    int upper = 1;
    long long nodes_explored = 0;
};

/// Lower and upper bounds on TTr(g): the lower bound is 2 exactly when some
/// component has an induced P_3; the upper bound is
/// min(Delta+1, n-delta, floor((n+1)/2)).
std::pair<int, int> bounds_ttr(const Graph& g);

/// One feasibility question for the assignment search: is there a (tournament)
/// transitive partition of g into exactly k nonempty parts, subject to the
/// optional constraints below?
struct FeasibilityRequest {
    int k = 1;
    bool tournament = false;
    std::vector<std::pair<int, int>> fixed_parts; // (vertex, 1-based part)
    std::vector<std::pair<int, int>> part_caps;   // (1-based part, max size)
    std::function<bool(const OrderedPartition&)> leaf_filter;
};

/// Exhaustive assignment search with forward-domination pruning. Vertices are
/// assigned in descending-degree order (ties by id), parts tried in index
/// order; the first witness under that order is returned. Deterministic.
std::optional<OrderedPartition> find_partition(const Graph& g, const FeasibilityRequest& req,
                                               long long* nodes = nullptr);

/// Tr(g) by upward feasibility search (merging the first two parts shows
/// feasibility is monotone downward in k).
SolveReport transitivity_exact(const Graph& g, int cap = kDefaultOracleCap);

/// TTr(g); same architecture, with the tournament condition checked on
/// completed assignments.
SolveReport tournament_transitivity_exact(const Graph& g, int cap = kDefaultOracleCap);

/// A TTr-sized tournament witness with |V_k| = 1, |V_{k-1}| = 2 and the V_k
/// vertex adjacent to exactly one V_{k-1} vertex. Requires g connected and
/// TTr(g) >= 3; failure to find one is an invariant violation.
OrderedPartition normal_form_witness(const Graph& g, int cap = kDefaultOracleCap);

/// Largest p such that some transitive partition places v in V_p.
int transitive_number_exact(const Graph& g, int v, int cap = kDefaultOracleCap);

} // namespace ttr

#endif
