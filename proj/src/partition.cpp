#include "ttr/partition.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ttr {

std::string describe(const Violation& v) {
    std::ostringstream os;
    if (v.kind == ViolationKind::MissingDomination)
        os << "V_" << v.i << " does not dominate V_" << v.j << " (vertex " << v.witness
           << " has no neighbor in V_" << v.i << ")";
    else
        os << "V_" << v.j << " dominates V_" << v.i << " (every vertex of V_" << v.i
           << " has a neighbor in V_" << v.j << ", e.g. vertex " << v.witness << ")";
    return os.str();
}

void validate_partition(const Graph& g, const OrderedPartition& p) {
    if (p.parts.empty()) throw std::invalid_argument("partition has no parts");
    std::vector<char> seen(g.n(), 0);
    int covered = 0;
    for (const auto& part : p.parts) {
        if (part.empty()) throw std::invalid_argument("partition has an empty part");
        for (int v : part) {
            if (v < 0 || v >= g.n()) throw std::invalid_argument("partition vertex out of range");
            if (seen[v]) throw std::invalid_argument("partition parts overlap");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != g.n()) throw std::invalid_argument("partition does not cover V");
}

bool dominates(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("dominates: empty set");
    std::vector<char> in_a(g.n(), 0);
    for (int u : a) {
        if (u < 0 || u >= g.n()) throw std::invalid_argument("dominates: vertex out of range");
        in_a[u] = 1;
    }
    for (int v : b)
        if (v >= 0 && v < g.n() && in_a[v]) throw std::invalid_argument("dominates: sets overlap");
    for (int v : b) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("dominates: vertex out of range");
        bool hit = false;
        for (int w : g.neighbors(v))
            if (in_a[w]) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

namespace {

// Smallest vertex of b with no neighbor in part i (given membership array).
int undominated_vertex(const Graph& g, const std::vector<int>& part_of, const VertexSet& b, int i) {
    for (int v : b) {
        bool hit = false;
        for (int w : g.neighbors(v))
            if (part_of[w] == i) {
                hit = true;
                break;
            }
        if (!hit) return v;
    }
    return -1;
}

std::vector<int> part_membership(const Graph& g, const OrderedPartition& p) {
    std::vector<int> part_of(g.n(), 0);
    for (int i = 0; i < p.size(); ++i)
        for (int v : p.parts[i]) part_of[v] = i + 1;
    return part_of;
}

} // namespace

VerificationReport is_transitive(const Graph& g, const OrderedPartition& p) {
    validate_partition(g, p);
    auto part_of = part_membership(g, p);
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j) {
            int bad = undominated_vertex(g, part_of, p.parts[j - 1], i);
            if (bad != -1)
                return {false, Violation{i, j, ViolationKind::MissingDomination, bad}};
        }
    return {};
}

VerificationReport is_tournament_transitive(const Graph& g, const OrderedPartition& p) {
    validate_partition(g, p);
    auto part_of = part_membership(g, p);
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j) {
            int bad = undominated_vertex(g, part_of, p.parts[j - 1], i);
            if (bad != -1)
                return {false, Violation{i, j, ViolationKind::MissingDomination, bad}};
            // V_j must not dominate V_i: some x in V_i has no neighbor in V_j.
            int free_vertex = undominated_vertex(g, part_of, p.parts[i - 1], j);
            if (free_vertex == -1)
                return {false, Violation{i, j, ViolationKind::ForbiddenBackDomination,
                                         p.parts[i - 1].front()}};
        }
    return {};
}

OrderedPartition merge_first_two(const OrderedPartition& p) {
    if (p.size() < 2) throw std::invalid_argument("merge_first_two: need k >= 2");
    OrderedPartition out;
    VertexSet merged(p.parts[0]);
    merged.insert(merged.end(), p.parts[1].begin(), p.parts[1].end());
    std::sort(merged.begin(), merged.end());
    out.parts.push_back(std::move(merged));
    for (int i = 2; i < p.size(); ++i) out.parts.push_back(p.parts[i]);
    return out;
}

OrderedPartition shrink_to(const OrderedPartition& p, int j) {
    if (j < 1 || j > p.size()) throw std::invalid_argument("shrink_to: j out of range");
    OrderedPartition out = p;
    while (out.size() > j) out = merge_first_two(out);
    return out;
}

OrderedPartition parse_partition(const std::string& text) {
    OrderedPartition p;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        VertexSet part;
        int v;
        while (ls >> v) part.push_back(v);
        if (!ls.eof())
            throw std::runtime_error("partition line " + std::to_string(lineno) + ": expected vertex ids");
        if (part.empty()) continue;
        std::sort(part.begin(), part.end());
        p.parts.push_back(std::move(part));
    }
    if (p.parts.empty()) throw std::runtime_error("partition file has no parts");
    return p;
}

OrderedPartition read_partition_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_partition(buf.str());
}

std::string write_partition(const OrderedPartition& p) {
    std::ostringstream os;
    for (const auto& part : p.parts) {
        for (size_t i = 0; i < part.size(); ++i) {
            if (i) os << " ";
            os << part[i];
        }
        os << "\n";
    }
    return os.str();
}

} // namespace ttr
