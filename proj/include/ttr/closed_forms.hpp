#ifndef TTR_CLOSED_FORMS_HPP
#define TTR_CLOSED_FORMS_HPP

#include "ttr/graph.hpp"
#include "ttr/partition.hpp"

#include <optional>

namespace ttr {

/// TTr values for the named families:
///   K_n -> 1
///   P_n -> 1 (n<=2), 2 (n=3,4), 3 (n>=5)
///   C_n -> 1 (n=3), 2 (n=4,5), 3 (n>=6)
///   K_{m,n} -> 1 (m=n=1), 2 otherwise; stars likewise
///   t disjoint copies of K_n (t<=n) -> t
int ttr_formula(const GraphFamily& f);

/// Tr where a closed form is known: Tr(K_n) = n and Tr(K_{m,n}) = min(m,n)+1
/// for m != n. Throws for families without a stated formula.
int tr_formula(const GraphFamily& f);

/// Size-t tournament transitive partition of t.K_n (1 <= t <= n), built by
/// the slot-union scheme: within copy j, slot i is the i-th vertex; part j
/// collects slot j of copies 1..t-j plus slots j..t of copy t-j+1, and part 1
/// additionally absorbs slots t+1..n of every copy.
OrderedPartition build_clique_union_witness(int t, int n);

/// Lifts a tournament witness of the component induced on `comp` to the whole
/// graph by absorbing every foreign vertex into part 1. Size is preserved.
OrderedPartition lift_component_witness(const Graph& g, const OrderedPartition& component_witness,
                                        const VertexSet& comp);

/// Best-effort structural recognizer feeding the CLI convenience mode; only
/// returns a family when the graph is an exact canonical-or-relabelled match.
std::optional<GraphFamily> recognize_family(const Graph& g);

} // namespace ttr

#endif
