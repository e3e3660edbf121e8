#ifndef TTR_PARTITION_HPP
#define TTR_PARTITION_HPP

#include "ttr/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ttr {

/// Ordered vertex partition V_1..V_k. The position of a part is semantic:
/// parts[0] is V_1. Parts are kept as sorted vertex sets.
struct OrderedPartition {
    std::vector<VertexSet> parts;

    int size() const { return static_cast<int>(parts.size()); }
    bool operator==(const OrderedPartition& other) const { return parts == other.parts; }
};

enum class ViolationKind { MissingDomination, ForbiddenBackDomination };

struct Violation {
    int i = 0; // 1-based part indices, i < j
    int j = 0;
    ViolationKind kind = ViolationKind::MissingDomination;
    int witness = -1; // offending vertex (smallest id)
};

struct VerificationReport {
    bool ok = true;
    std::optional<Violation> first_violation;
};

std::string describe(const Violation& v);

/// Throws std::invalid_argument unless parts are nonempty, disjoint and
/// cover V(g) exactly.
void validate_partition(const Graph& g, const OrderedPartition& p);

/// Set-to-set domination: every vertex of b has a neighbor in a.
/// Requires a, b nonempty and disjoint.
bool dominates(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Checks V_i dominates V_j for all i < j. The first violation is the
/// lexicographically smallest (i, j).
VerificationReport is_transitive(const Graph& g, const OrderedPartition& p);

/// Transitive check plus the tournament condition: for i < j some vertex of
/// V_i has no neighbor in V_j. Per pair, missing forward domination is
/// reported before back-domination.
VerificationReport is_tournament_transitive(const Graph& g, const OrderedPartition& p);

/// {V_1 u V_2, V_3, ..., V_k}; requires k >= 2.
OrderedPartition merge_first_two(const OrderedPartition& p);

/// Applies merge_first_two k-j times; requires 1 <= j <= k.
OrderedPartition shrink_to(const OrderedPartition& p, int j);

/// Partition text format: one line per part, space-separated vertex ids,
/// part V_1 first.
OrderedPartition parse_partition(const std::string& text);
OrderedPartition read_partition_file(const std::string& path);
std::string write_partition(const OrderedPartition& p);

} // namespace ttr

#endif
