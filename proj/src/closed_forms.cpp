#include "ttr/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttr {

int ttr_formula(const GraphFamily& f) {
    switch (f.tag) {
    case FamilyTag::Complete:
        if (f.a < 1) throw std::invalid_argument("ttr_formula: bad params");
        return 1;
    case FamilyTag::Path:
        if (f.a < 1) throw std::invalid_argument("ttr_formula: bad params");
        if (f.a <= 2) return 1;
        return f.a <= 4 ? 2 : 3;
    case FamilyTag::Cycle:
        if (f.a < 3) throw std::invalid_argument("ttr_formula: bad params");
        if (f.a == 3) return 1;
        return f.a <= 5 ? 2 : 3;
    case FamilyTag::CompleteBipartite:
        if (f.a < 1 || f.b < 1) throw std::invalid_argument("ttr_formula: bad params");
        return (f.a == 1 && f.b == 1) ? 1 : 2;
    case FamilyTag::Star:
        if (f.a < 1) throw std::invalid_argument("ttr_formula: bad params");
        return f.a == 1 ? 1 : 2;
    case FamilyTag::CliqueUnion:
        if (f.a < 1 || f.a > f.b) throw std::invalid_argument("ttr_formula: requires 1 <= t <= n");
        return f.a;
    }
    throw std::logic_error("unreachable family tag");
}

int tr_formula(const GraphFamily& f) {
    switch (f.tag) {
    case FamilyTag::Complete:
        if (f.a < 1) throw std::invalid_argument("tr_formula: bad params");
        return f.a;
    case FamilyTag::CompleteBipartite: {
        if (f.a < 1 || f.b < 1) throw std::invalid_argument("tr_formula: bad params");
        if (f.a == f.b)
            throw std::invalid_argument("tr_formula: K_{n,n} not covered by the stated formula");
        return std::min(f.a, f.b) + 1;
    }
    case FamilyTag::Star:
        return f.a == 1 ? tr_formula(GraphFamily::complete(2))
                        : tr_formula(GraphFamily::complete_bipartite(1, f.a));
    default:
        throw std::invalid_argument("tr_formula: no stated formula for family " + f.to_string());
    }
}

OrderedPartition build_clique_union_witness(int t, int n) {
    if (t < 1 || t > n) throw std::invalid_argument("build_clique_union_witness: requires 1 <= t <= n");
    // copy j (1-based) occupies ids (j-1)*n .. j*n-1; slot i of copy j is
    // vertex (j-1)*n + (i-1).
    auto vertex = [n](int copy, int slot) { return (copy - 1) * n + (slot - 1); };
    OrderedPartition p;
    p.parts.resize(t);
    for (int j = 1; j <= t; ++j) {
        auto& part = p.parts[j - 1];
        for (int copy = 1; copy <= t - j; ++copy) part.push_back(vertex(copy, j));
        for (int slot = j; slot <= t; ++slot) part.push_back(vertex(t - j + 1, slot));
    }
    for (int copy = 1; copy <= t; ++copy)
        for (int slot = t + 1; slot <= n; ++slot) p.parts[0].push_back(vertex(copy, slot));
    for (auto& part : p.parts) std::sort(part.begin(), part.end());
    return p;
}

OrderedPartition lift_component_witness(const Graph& g, const OrderedPartition& component_witness,
                                        const VertexSet& comp) {
    auto comps = connected_components(g);
    if (std::find(comps.begin(), comps.end(), comp) == comps.end())
        throw std::invalid_argument("lift_component_witness: comp is not a connected component");
    auto sub = induced_subgraph(g, comp);
    validate_partition(sub.graph, component_witness);

    OrderedPartition lifted;
    lifted.parts.resize(component_witness.size());
    for (int i = 0; i < component_witness.size(); ++i)
        for (int v : component_witness.parts[i]) lifted.parts[i].push_back(sub.old_id[v]);
    for (int v = 0; v < g.n(); ++v)
        if (sub.new_id[v] == -1) lifted.parts[0].push_back(v);
    for (auto& part : lifted.parts) std::sort(part.begin(), part.end());
    return lifted;
}

namespace {

bool all_degrees(const Graph& g, int d) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    VertexSet left, right;
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            (color[v] == 0 ? left : right).push_back(v);
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return std::make_pair(left, right);
}

} // namespace

std::optional<GraphFamily> recognize_family(const Graph& g) {
    int n = g.n();
    if (g.m() == n * (n - 1) / 2) return GraphFamily::complete(n);

    auto comps = connected_components(g);
    if (comps.size() > 1) {
        // clique union: equally-sized complete components, t <= component size
        size_t sz = comps[0].size();
        for (const auto& c : comps) {
            if (c.size() != sz) return std::nullopt;
            auto sub = induced_subgraph(g, c).graph;
            if (sub.m() != sub.n() * (sub.n() - 1) / 2) return std::nullopt;
        }
        int t = static_cast<int>(comps.size());
        if (t <= static_cast<int>(sz)) return GraphFamily::clique_union(t, static_cast<int>(sz));
        return std::nullopt;
    }

    if (n >= 3 && g.m() == n && all_degrees(g, 2)) return GraphFamily::cycle(n);
    if (is_tree(g)) {
        if (n == 1) return GraphFamily::path(1);
        int leaves = 0, mid = 0;
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) == 1) ++leaves;
            if (g.degree(v) == 2) ++mid;
        }
        if (leaves == 2 && mid == n - 2) return GraphFamily::path(n);
        if (leaves == n - 1) return GraphFamily::star(n - 1);
    }
    if (auto sides = bipartition(g)) {
        auto [a, b] = *sides;
        if (!a.empty() && !b.empty() &&
            g.m() == static_cast<int>(a.size()) * static_cast<int>(b.size())) {
            bool complete_across = true;
            for (int u : a)
                if (g.degree(u) != static_cast<int>(b.size())) complete_across = false;
            if (complete_across)
                return GraphFamily::complete_bipartite(static_cast<int>(a.size()),
                                                       static_cast<int>(b.size()));
        }
    }
    return std::nullopt;
}

} // namespace ttr
