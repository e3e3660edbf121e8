#include "ttr/gadget.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttr {

long long GadgetInstance::edges_in_copies() const {
    return 3LL * base.m() * (delta + 1);
}

long long GadgetInstance::hub_to_copy_edges() const {
    return 3LL * base.n() * (delta + 1);
}

GadgetInstance build_reduction(const Graph& g) {
    GadgetInstance gi{g, Graph(1), {}, {}, g.max_degree()};
    int c = gi.delta + 1;
    int n = g.n();
    int total = 3 * c * n + 3;
    std::vector<std::pair<int, int>> edges;
    for (int copy = 0; copy < 3 * c; ++copy) {
        gi.copy_offsets.push_back(copy * n);
        for (auto [u, v] : g.edges()) edges.emplace_back(copy * n + u, copy * n + v);
    }
    int x = 3 * c * n;
    gi.hubs = {x, x + 1, x + 2};
    for (int group = 0; group < 3; ++group)
        for (int copy = group * c; copy < (group + 1) * c; ++copy)
            for (int v = 0; v < n; ++v) edges.emplace_back(gi.hubs[group], copy * n + v);
    edges.emplace_back(gi.hubs[0], gi.hubs[1]);
    edges.emplace_back(gi.hubs[1], gi.hubs[2]);
    gi.gadget = Graph(total, edges);
    return gi;
}

namespace {

// Shared slot-union scheme; offset_of(copy) maps a 1-based copy index to the
// id offset of that copy in the target graph.
template <typename OffsetFn>
OrderedPartition union_scheme(const OrderedPartition& p, int copies, OffsetFn offset_of) {
    int k = p.size();
    OrderedPartition out;
    out.parts.resize(k);
    auto add_slot = [&](int part, int copy, int slot) {
        for (int v : p.parts[slot - 1]) out.parts[part - 1].push_back(offset_of(copy) + v);
    };
    for (int j = 1; j <= k; ++j) {
        for (int copy = 1; copy <= k - j; ++copy) add_slot(j, copy, j);
        for (int slot = j; slot <= k; ++slot) add_slot(j, k - j + 1, slot);
    }
    for (int copy = k + 1; copy <= copies; ++copy)
        for (int slot = 1; slot <= k; ++slot) add_slot(1, copy, slot);
    for (auto& part : out.parts) std::sort(part.begin(), part.end());
    return out;
}

} // namespace

OrderedPartition build_union_partition(const Graph& g, const OrderedPartition& p, int copies) {
    if (copies < p.size())
        throw std::invalid_argument("build_union_partition: copies < partition size");
    auto rep = is_transitive(g, p);
    if (!rep.ok)
        throw std::invalid_argument("build_union_partition: input partition is not transitive: " +
                                    describe(*rep.first_violation));
    auto out = union_scheme(p, copies, [&](int copy) { return (copy - 1) * g.n(); });
    auto all = disjoint_union(std::vector<Graph>(copies, g));
    auto check = is_tournament_transitive(all.graph, out);
    if (!check.ok)
        throw std::logic_error("build_union_partition: constructed partition failed verification: " +
                               describe(*check.first_violation));
    return out;
}

OrderedPartition lift_partition(const GadgetInstance& gi, const OrderedPartition& p) {
    auto rep = is_transitive(gi.base, p);
    if (!rep.ok)
        throw std::invalid_argument("lift_partition: input partition is not transitive: " +
                                    describe(*rep.first_violation));
    int k = p.size();
    int c = gi.delta + 1;
    OrderedPartition out;
    out.parts.resize(k + 2);
    for (int group = 0; group < 3; ++group) {
        auto part_of_group = union_scheme(
            p, c, [&](int copy) { return gi.copy_offsets[group * c + copy - 1]; });
        for (int j = 0; j < k; ++j)
            out.parts[j].insert(out.parts[j].end(), part_of_group.parts[j].begin(),
                                part_of_group.parts[j].end());
    }
    out.parts[k] = {gi.hubs[1], gi.hubs[2]};
    out.parts[k + 1] = {gi.hubs[0]};
    for (auto& part : out.parts) std::sort(part.begin(), part.end());
    auto check = is_tournament_transitive(gi.gadget, out);
    if (!check.ok)
        throw std::logic_error("lift_partition: constructed partition failed verification: " +
                               describe(*check.first_violation));
    return out;
}

} // namespace ttr
