#ifndef TTR_GRAPH_HPP
#define TTR_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ttr {

using VertexSet = std::vector<int>; // sorted, no duplicates

/// Simple undirected graph with contiguous 0-based vertex ids.
/// Immutable after construction; adjacency lists are kept sorted.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

enum class FamilyTag { Complete, Path, Cycle, CompleteBipartite, Star, CliqueUnion };

/// Named graph family with its integer parameters: (n) for Complete/Path/
/// Cycle/Star, (m, n) for CompleteBipartite, (t, n) for CliqueUnion.
struct GraphFamily {
    FamilyTag tag;
    int a = 0;
    int b = 0;

    static GraphFamily complete(int n) { return {FamilyTag::Complete, n, 0}; }
    static GraphFamily path(int n) { return {FamilyTag::Path, n, 0}; }
    static GraphFamily cycle(int n) { return {FamilyTag::Cycle, n, 0}; }
    static GraphFamily complete_bipartite(int m, int n) { return {FamilyTag::CompleteBipartite, m, n}; }
    static GraphFamily star(int t) { return {FamilyTag::Star, t, 0}; }
    static GraphFamily clique_union(int t, int n) { return {FamilyTag::CliqueUnion, t, n}; }

    std::string to_string() const;
    /// Parses "path:5", "kmn:2,3", "cliqueunion:3,3" etc.
    static GraphFamily parse(const std::string& text);
};

struct ParsedGraph {
    Graph graph;
    int duplicate_edges = 0; // collapsed silently, counted for reporting
};

/// Reads the repo's edge-list format: first line "n m", then m lines "u v".
/// Throws std::runtime_error naming the offending line on malformed input.
ParsedGraph parse_edge_list(const std::string& text);
ParsedGraph read_edge_list_file(const std::string& path);

/// Canonical writer: "n m" then edges sorted with u < v; round-trips bit-exact.
std::string write_edge_list(const Graph& g);

Graph generate(const GraphFamily& family);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_id;            // new id -> old id
    std::vector<int> new_id;            // old id -> new id, -1 if dropped
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

struct DisjointUnion {
    Graph graph;
    std::vector<int> offsets; // id offset of each part
};

DisjointUnion disjoint_union(const std::vector<Graph>& parts);

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// True iff some vertex has two mutually nonadjacent neighbors.
bool has_induced_p3(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Unique u-v path in a tree, endpoints inclusive.
std::vector<int> tree_path(const Graph& g, int u, int v);

} // namespace ttr

#endif
