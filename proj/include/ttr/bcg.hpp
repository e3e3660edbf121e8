#ifndef TTR_BCG_HPP
#define TTR_BCG_HPP

#include "ttr/graph.hpp"
#include "ttr/oracle.hpp"
#include "ttr/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ttr {

/// Chain ordering of a bipartite chain graph: both sides sorted so that
/// neighborhoods are nested, N(x_{i+1}) subset of N(x_i).
struct ChainOrdering {
    std::vector<int> sigma_x;
    std::vector<int> sigma_y;
};

/// Sides by 2-coloring, each sorted by descending degree (ties by ascending
/// id); throws if the graph is not bipartite or the nesting fails.
ChainOrdering chain_ordering(const Graph& g);

/// Largest t with x_t y_t an edge; in a chain ordering the prefix
/// X_t u Y_t then induces K_{t,t}, and no larger induced biclique exists.
int max_biclique_t(const Graph& g, const ChainOrdering& ord);

enum class BcgKind { CompleteBipartite, TypeI, TypeIIa, TypeIIb, TypeIII };

std::string to_string(BcgKind k);

struct BCGClassification {
    BcgKind kind = BcgKind::CompleteBipartite;
    int t = 1;
    bool side_swapped = false; // sides exchanged so that x_t y_{t+1} is the Type-II edge
    ChainOrdering ord;         // ordering after any swap
};

/// Classifies by the two edges just past the K_{t,t} prefix. Requires a
/// connected-or-edge-covered chain graph (no isolated vertices).
BCGClassification classify_bcg(const Graph& g);

/// Outside vertices matching the degree windows |N(z_1)| = t-1 and
/// t-j+1 >= |N(z_j)| >= t-j, or nullopt.
std::optional<std::vector<int>> type1_condition(const Graph& g, const ChainOrdering& ord, int t);
/// Windows t-j >= |N(z_j)| >= t-j-1 over (X \ X_t) u {y_{t+2}, ...}.
std::optional<std::vector<int>> type2a_condition(const Graph& g, const ChainOrdering& ord, int t);
/// Windows t-j-1 >= |N(z_j)| >= t-j-2 over {x_{t+2}, ...} u {y_{t+2}, ...}.
std::optional<std::vector<int>> type2b_condition(const Graph& g, const ChainOrdering& ord, int t);

enum class BcgReason {
    CompleteBipartiteFormula,
    Type1Iff,
    Type2aSufficient,
    Type2bSufficient,
    Type3Strict,
    ConditionFailed,
    OracleFallback,
};

std::string to_string(BcgReason r);

struct TTrDetermination {
    bool exact = false;
    int value = 0; // set when exact
    int lo = 1;
    int hi = 1;
    std::optional<OrderedPartition> witness;
    BcgReason reason = BcgReason::ConditionFailed;
    std::vector<int> condition_witnesses;
};

/// TTr of a bipartite chain graph through the type theorems, with the exact
/// oracle as fallback (and as a cross-check: a theorem verdict disagreeing
/// with the oracle is a hard error).
TTrDetermination ttr_bcg(const Graph& g, int cap = kDefaultOracleCap);

} // namespace ttr

#endif
