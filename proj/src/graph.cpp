#include "ttr/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ttr {

Graph::Graph(int n) : adj_(n >= 1 ? n : throw std::invalid_argument("graph needs n >= 1")) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m_ += static_cast<int>(nbrs.size());
    }
    m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

int Graph::min_degree() const {
    int d = n();
    for (const auto& nbrs : adj_) d = std::min(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string GraphFamily::to_string() const {
    std::ostringstream os;
    switch (tag) {
    case FamilyTag::Complete: os << "complete:" << a; break;
    case FamilyTag::Path: os << "path:" << a; break;
    case FamilyTag::Cycle: os << "cycle:" << a; break;
    case FamilyTag::CompleteBipartite: os << "kmn:" << a << "," << b; break;
    case FamilyTag::Star: os << "star:" << a; break;
    case FamilyTag::CliqueUnion: os << "cliqueunion:" << a << "," << b; break;
    }
    return os.str();
}

GraphFamily GraphFamily::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec needs name:params, got '" + text + "'");
    std::string name = text.substr(0, colon);
    std::string params = text.substr(colon + 1);
    auto comma = params.find(',');
    int a = 0, b = 0;
    bool two = comma != std::string::npos;
    try {
        if (two) {
            a = std::stoi(params.substr(0, comma));
            b = std::stoi(params.substr(comma + 1));
        } else {
            a = std::stoi(params);
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad family params in '" + text + "'");
    }
    if (name == "complete" || name == "kn") return complete(a);
    if (name == "path") return path(a);
    if (name == "cycle") return cycle(a);
    if (name == "star") return star(a);
    if (name == "kmn" || name == "completebipartite") {
        if (!two) throw std::invalid_argument("kmn needs two params");
        return complete_bipartite(a, b);
    }
    if (name == "cliqueunion") {
        if (!two) throw std::invalid_argument("cliqueunion needs two params");
        return clique_union(a, b);
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

ParsedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("edge list line " + std::to_string(lineno) + ": " + what);
    };

    int n = -1;
    long long m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (!(ls >> n >> m) || n < 1 || m < 0) fail("expected header 'n m'");
        break;
    }
    if (n < 0) { lineno = 1; fail("empty input"); }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    long long seen = 0;
    while (seen < m) {
        if (!std::getline(in, line)) { ++lineno; fail("missing edge line"); }
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) fail("expected 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex id out of range");
        if (u == v) fail("self-loop");
        edges.emplace_back(u, v);
        ++seen;
    }

    std::vector<std::pair<int, int>> canon(edges);
    for (auto& e : canon)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(canon.begin(), canon.end());
    int dup = static_cast<int>(canon.size() - (std::unique(canon.begin(), canon.end()) - canon.begin()));

    return ParsedGraph{Graph(n, edges), dup};
}

ParsedGraph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_edge_list(buf.str());
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph generate(const GraphFamily& f) {
    std::vector<std::pair<int, int>> edges;
    switch (f.tag) {
    case FamilyTag::Complete: {
        if (f.a < 1) throw std::invalid_argument("complete: n >= 1 required");
        for (int u = 0; u < f.a; ++u)
            for (int v = u + 1; v < f.a; ++v) edges.emplace_back(u, v);
        return Graph(f.a, edges);
    }
    case FamilyTag::Path: {
        if (f.a < 1) throw std::invalid_argument("path: n >= 1 required");
        for (int u = 0; u + 1 < f.a; ++u) edges.emplace_back(u, u + 1);
        return Graph(f.a, edges);
    }
    case FamilyTag::Cycle: {
        if (f.a < 3) throw std::invalid_argument("cycle: n >= 3 required");
        for (int u = 0; u < f.a; ++u) edges.emplace_back(u, (u + 1) % f.a);
        return Graph(f.a, edges);
    }
    case FamilyTag::CompleteBipartite: {
        if (f.a < 1 || f.b < 1) throw std::invalid_argument("kmn: m, n >= 1 required");
        for (int u = 0; u < f.a; ++u)
            for (int v = 0; v < f.b; ++v) edges.emplace_back(u, f.a + v);
        return Graph(f.a + f.b, edges);
    }
    case FamilyTag::Star: {
        if (f.a < 1) throw std::invalid_argument("star: t >= 1 required");
        return generate(GraphFamily::complete_bipartite(1, f.a));
    }
    case FamilyTag::CliqueUnion: {
        int t = f.a, n = f.b;
        if (t < 1 || n < 1) throw std::invalid_argument("cliqueunion: t, n >= 1 required");
        if (t > n) throw std::invalid_argument("cliqueunion requires t <= n");
        for (int j = 0; j < t; ++j)
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(j * n + u, j * n + v);
        return Graph(t * n, edges);
    }
    }
    throw std::logic_error("unreachable family tag");
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> new_id(g.n(), -1);
    std::vector<int> old_id;
    old_id.reserve(s.size());
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (new_id[v] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
        new_id[v] = static_cast<int>(old_id.size());
        old_id.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (v < w && new_id[w] != -1) edges.emplace_back(new_id[v], new_id[w]);
    return InducedSubgraph{Graph(static_cast<int>(s.size()), edges), std::move(old_id), std::move(new_id)};
}

DisjointUnion disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint_union: need at least one part");
    std::vector<int> offsets;
    int total = 0;
    for (const auto& p : parts) {
        offsets.push_back(total);
        total += p.n();
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < parts.size(); ++i)
        for (auto [u, v] : parts[i].edges()) edges.emplace_back(offsets[i] + u, offsets[i] + v);
    return DisjointUnion{Graph(total, edges), std::move(offsets)};
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool has_induced_p3(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        const auto& nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                if (!g.has_edge(nbrs[i], nbrs[j])) return true;
    }
    return false;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
    return g.m() == g.n() - 1 && is_connected(g);
}

std::vector<int> tree_path(const Graph& g, int u, int v) {
    if (!is_tree(g)) throw std::invalid_argument("tree_path: not a tree");
    if (u == v) throw std::invalid_argument("tree_path: u == v");
    std::vector<int> parent(g.n(), -2);
    std::queue<int> q;
    q.push(u);
    parent[u] = -1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) break;
        for (int w : g.neighbors(x))
            if (parent[w] == -2) {
                parent[w] = x;
                q.push(w);
            }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace ttr
