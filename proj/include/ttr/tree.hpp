#ifndef TTR_TREE_HPP
#define TTR_TREE_HPP

#include "ttr/graph.hpp"
#include "ttr/oracle.hpp"
#include "ttr/partition.hpp"

#include <vector>

namespace ttr {

struct RootedTree {
    int root = 0;
    std::vector<int> parent;             // -1 at root
    std::vector<std::vector<int>> children; // ordered by id
    std::vector<int> bfs_order;
};

/// BFS-roots a tree at r.
RootedTree root_at(const Graph& t, int r);

struct PrunedTree {
    Graph graph;
    std::vector<int> old_id; // new -> old
    std::vector<int> new_id; // old -> new, -1 if removed
};

/// The tree rooted at c with the whole subtree of cp (in T^c) deleted.
PrunedTree pruned_tree(const Graph& t, int c, int cp);

struct ChildLadder {
    std::vector<int> sorted_values; // nondecreasing
    std::vector<int> chosen;        // indices into sorted_values; size z
    int z = 0;
};

/// Largest z such that some subsequence l_{i_1} <= ... <= l_{i_z} of the
/// values has l_{i_j} >= j for all j. The selection is the z largest values
/// (suffix of the sorted order), which is always optimal here.
ChildLadder ladder(const std::vector<int>& child_values);

/// Rooted transitive numbers of every vertex: value(v) = 1 + z over the
/// children's values, computed bottom-up.
std::vector<int> rooted_values(const RootedTree& rt);

int rooted_transitive_number(const RootedTree& rt, int v);

struct TransitiveProfile {
    std::vector<int> values; // t(v, T) per vertex

    int max() const;
};

/// t(v, T) for every v, by per-vertex rerooting (O(n^2) total). Runs the
/// rerooting loop in parallel when OpenMP is enabled.
TransitiveProfile transitive_profile(const Graph& t);
/// Serial reference implementation; always produces the same profile.
TransitiveProfile transitive_profile_serial(const Graph& t);

/// Tr(T) = max transitive number (transitivity equals the Grundy number on
/// trees).
int transitivity_tree(const Graph& t);

/// Partition indices the j-th selected ladder child of the root x may take in
/// a transitive partition that places x in V_{1+z}: the guaranteed band
/// [j, min(l, z)] plus, for j >= 2, a low band [r, j-1] when either a
/// non-selected child of x has rooted value >= j (then r = 1) or the selected
/// values allow an upward shift (minimal r with l_{i_t} >= t+1 for all
/// r <= t <= j-1).
VertexSet allowed_indices_at_anchor(const RootedTree& rt, int x, int target_child, int j);

/// Consecutive path vertices with their admissible partition indices: X pins
/// the anchor y to V_{k-1}, interior vertices to the unique index
/// t(x_j, T^{[x_j, x_{j-1}]}), and the last vertex to its ladder band.
struct PathRequirement {
    int y = -1, z = -1, k = 0; // provenance
    std::vector<int> vertices; // anchor first
    std::vector<VertexSet> allowed;

    const VertexSet* find(int v) const;
};

PathRequirement compute_X(const Graph& t, int y, int z, int k);
PathRequirement compute_Y(const Graph& t, int y, int z, int k);

/// True iff X and Y are disjoint or every shared vertex admits a common
/// index. Throws if the requirements come from different (y, z, k).
bool agrees(const PathRequirement& xreq, const PathRequirement& yreq);

/// Transitive witness on a tree: places root at V_p (p <= rooted value) and
/// every other vertex greedily below it.
OrderedPartition place_root_at(const Graph& t, int root, int p);

/// TTr(T) with a verifying witness; the value is Tr(T) or Tr(T)-1, decided by
/// scanning candidate pairs (y, z). Runs the pair scan in parallel when
/// OpenMP is enabled (result identical to the serial scan).
SolveReport tournament_transitivity_tree(const Graph& t, bool want_witness = true);
SolveReport tournament_transitivity_tree_serial(const Graph& t, bool want_witness = true);

} // namespace ttr

#endif
