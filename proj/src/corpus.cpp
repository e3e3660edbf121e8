#include "ttr/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace ttr::corpus {

namespace {

struct RootedShape {
    std::string canon;                     // "(" + sorted child canons + ")"
    std::vector<std::pair<int, int>> edges; // local ids, root = 0
    int size = 1;
};

// Canonical rooted trees of each size, built by combining nondecreasing
// multisets of smaller shapes as children.
class RootedShapes {
public:
    explicit RootedShapes(int max_n) : by_size_(max_n + 1) {
        by_size_[1] = {RootedShape{"()", {}, 1}};
        for (int n = 2; n <= max_n; ++n) {
            pool_.clear();
            for (int s = 1; s < n; ++s)
                for (const auto& shape : by_size_[s]) pool_.push_back(&shape);
            std::vector<const RootedShape*> children;
            extend(n - 1, 0, children, by_size_[n]);
        }
    }

    const std::vector<RootedShape>& of_size(int n) const { return by_size_[n]; }

private:
    void extend(int remaining, size_t min_idx, std::vector<const RootedShape*>& children,
                std::vector<RootedShape>& out) {
        if (remaining == 0) {
            out.push_back(combine(children));
            return;
        }
        for (size_t i = min_idx; i < pool_.size(); ++i) {
            if (pool_[i]->size > remaining) continue;
            children.push_back(pool_[i]);
            extend(remaining - pool_[i]->size, i, children, out);
            children.pop_back();
        }
    }

    static RootedShape combine(std::vector<const RootedShape*> children) {
        std::sort(children.begin(), children.end(),
                  [](const RootedShape* a, const RootedShape* b) { return a->canon < b->canon; });
        RootedShape shape;
        shape.canon = "(";
        for (const auto* c : children) {
            int offset = shape.size;
            shape.edges.emplace_back(0, offset);
            for (auto [u, v] : c->edges) shape.edges.emplace_back(u + offset, v + offset);
            shape.size += c->size;
            shape.canon += c->canon;
        }
        shape.canon += ")";
        return shape;
    }

    std::vector<std::vector<RootedShape>> by_size_;
    std::vector<const RootedShape*> pool_;
};

std::string ahu_canon(const Graph& g, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : g.neighbors(v))
        if (w != parent) kids.push_back(ahu_canon(g, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
}

std::vector<int> tree_centers(const Graph& g) {
    int n = g.n();
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) order.push_back(v);
    }
    std::vector<char> peeled(n, 0);
    int remaining = n;
    size_t head = 0;
    while (remaining > 2) {
        size_t layer_end = order.size();
        for (; head < layer_end; ++head) {
            int v = order[head];
            peeled[v] = 1;
            --remaining;
            for (int w : g.neighbors(v))
                if (!peeled[w] && --deg[w] == 1) order.push_back(w);
        }
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!peeled[v]) centers.push_back(v);
    return centers;
}

std::string free_canon(const Graph& g) {
    auto centers = tree_centers(g);
    if (centers.size() == 1) return ahu_canon(g, centers[0], -1);
    std::string a = ahu_canon(g, centers[0], centers[1]);
    std::string b = ahu_canon(g, centers[1], centers[0]);
    return a <= b ? a + "|" + b : b + "|" + a;
}

} // namespace

std::vector<Graph> all_trees(int n) {
    if (n < 1) throw std::invalid_argument("all_trees: n >= 1 required");
    RootedShapes shapes(n);
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const auto& shape : shapes.of_size(n)) {
        Graph g(n, shape.edges);
        auto canon = free_canon(g);
        if (seen.insert(canon).second) out.push_back(std::move(g));
    }
    return out;
}

Graph random_graph(int n, int num, int den, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_tree: n >= 1 required");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {{0, 1}});
    std::vector<int> pruefer(n - 2);
    for (auto& p : pruefer) p = rng.uniform(0, n - 1);
    std::vector<int> deg(n, 1);
    for (int p : pruefer) ++deg[p];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int p : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, p);
        if (--deg[p] == 1) leaves.insert(p);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph random_connected_bcg(int max_n, Rng& rng) {
    if (max_n < 2) throw std::invalid_argument("random_connected_bcg: need max_n >= 2");
    int n1 = rng.uniform(1, max_n - 1);
    int n2 = rng.uniform(1, std::min(max_n - n1, max_n - 1));
    // nested prefix neighborhoods: x_i adjacent to y_1..y_{d_i}, nonincreasing
    // d with d_1 = n2 keeps everything connected
    std::vector<int> d(n1);
    d[0] = n2;
    for (int i = 1; i < n1; ++i) d[i] = rng.uniform(1, d[i - 1]);
    std::vector<int> relabel(n1 + n2);
    for (int i = 0; i < n1 + n2; ++i) relabel[i] = i;
    for (int i = n1 + n2 - 1; i > 0; --i) std::swap(relabel[i], relabel[rng.uniform(0, i)]);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < d[i]; ++j) edges.emplace_back(relabel[i], relabel[n1 + j]);
    return Graph(n1 + n2, edges);
}

} // namespace ttr::corpus
