#ifndef TTR_GADGET_HPP
#define TTR_GADGET_HPP

#include "ttr/graph.hpp"
#include "ttr/partition.hpp"

#include <array>
#include <vector>

namespace ttr {

/// The hardness-reduction graph: 3(Delta+1) copies of the base, each third of
/// them fully joined to one of three hub vertices x - x' - x'' forming a path.
struct GadgetInstance {
    Graph base;
    Graph gadget;
    std::array<int, 3> hubs{};      // x, x', x''
    std::vector<int> copy_offsets;  // 3(Delta+1) entries
    int delta = 0;

    long long edges_in_copies() const;   // 3m(Delta+1)
    long long hub_to_copy_edges() const; // 3n(Delta+1)
    static constexpr long long hub_hub_edges() { return 2; }
};

GadgetInstance build_reduction(const Graph& g);

/// Size-k tournament transitive partition of `copies` disjoint copies of g,
/// from a transitive partition p of g of size k: part j takes slot j of
/// copies 1..k-j plus slots j..k of copy k-j+1, and part 1 absorbs the copies
/// beyond k. Requires copies >= k; the result is verified before returning.
OrderedPartition build_union_partition(const Graph& g, const OrderedPartition& p, int copies);

/// Size-(k+2) tournament witness of the gadget from a size-k transitive
/// partition of the base: the union scheme inside each hub group, then
/// {x', x''} and {x} on top. Verification failure is a construction bug and
/// throws.
OrderedPartition lift_partition(const GadgetInstance& gi, const OrderedPartition& p);

} // namespace ttr

#endif
