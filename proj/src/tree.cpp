#include "ttr/tree.hpp"

#include <algorithm>
#include <climits>
#include <exception>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ttr {

RootedTree root_at(const Graph& t, int r) {
    if (!is_tree(t)) throw std::invalid_argument("root_at: not a tree");
    if (r < 0 || r >= t.n()) throw std::invalid_argument("root_at: bad root");
    RootedTree rt;
    rt.root = r;
    rt.parent.assign(t.n(), -1);
    rt.children.assign(t.n(), {});
    rt.bfs_order.reserve(t.n());
    rt.bfs_order.push_back(r);
    std::vector<char> seen(t.n(), 0);
    seen[r] = 1;
    for (size_t head = 0; head < rt.bfs_order.size(); ++head) {
        int v = rt.bfs_order[head];
        for (int w : t.neighbors(v)) { // sorted, so children come out by id
            if (seen[w]) continue;
            seen[w] = 1;
            rt.parent[w] = v;
            rt.children[v].push_back(w);
            rt.bfs_order.push_back(w);
        }
    }
    return rt;
}

PrunedTree pruned_tree(const Graph& t, int c, int cp) {
    if (c == cp) throw std::invalid_argument("pruned_tree: c == cp");
    auto rt = root_at(t, c);
    // drop cp and all its descendants in T^c
    std::vector<char> removed(t.n(), 0);
    std::vector<int> stack{cp};
    removed[cp] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : rt.children[v]) {
            removed[w] = 1;
            stack.push_back(w);
        }
    }
    VertexSet keep;
    for (int v = 0; v < t.n(); ++v)
        if (!removed[v]) keep.push_back(v);
    auto sub = induced_subgraph(t, keep);
    return PrunedTree{std::move(sub.graph), std::move(sub.old_id), std::move(sub.new_id)};
}

ChildLadder ladder(const std::vector<int>& child_values) {
    ChildLadder out;
    out.sorted_values = child_values;
    std::sort(out.sorted_values.begin(), out.sorted_values.end());
    int cnt = static_cast<int>(out.sorted_values.size());
    int prefix_min = INT_MAX;
    for (int m = 1; m <= cnt; ++m) {
        prefix_min = std::min(prefix_min, out.sorted_values[cnt - m] + m - 1);
        if (prefix_min >= m)
            out.z = m;
        else
            break;
    }
    out.chosen.resize(out.z);
    std::iota(out.chosen.begin(), out.chosen.end(), cnt - out.z);
    return out;
}

std::vector<int> rooted_values(const RootedTree& rt) {
    std::vector<int> dp(rt.parent.size(), 1);
    std::vector<int> vals;
    for (auto it = rt.bfs_order.rbegin(); it != rt.bfs_order.rend(); ++it) {
        int v = *it;
        if (rt.children[v].empty()) continue;
        vals.clear();
        for (int c : rt.children[v]) vals.push_back(dp[c]);
        dp[v] = 1 + ladder(vals).z;
    }
    return dp;
}

int rooted_transitive_number(const RootedTree& rt, int v) {
    if (v < 0 || v >= static_cast<int>(rt.parent.size()))
        throw std::invalid_argument("rooted_transitive_number: bad vertex");
    return rooted_values(rt)[v];
}

int TransitiveProfile::max() const {
    return *std::max_element(values.begin(), values.end());
}

TransitiveProfile transitive_profile_serial(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("transitive_profile: not a tree");
    TransitiveProfile prof;
    prof.values.resize(t.n());
    for (int v = 0; v < t.n(); ++v) {
        auto rt = root_at(t, v);
        prof.values[v] = rooted_values(rt)[v];
    }
    return prof;
}

TransitiveProfile transitive_profile(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("transitive_profile: not a tree");
#ifdef _OPENMP
    TransitiveProfile prof;
    prof.values.resize(t.n());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 8)
    for (int v = 0; v < t.n(); ++v) {
        try {
            auto rt = root_at(t, v);
            prof.values[v] = rooted_values(rt)[v];
        } catch (...) {
#pragma omp critical
            err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return prof;
#else
    return transitive_profile_serial(t);
#endif
}

int transitivity_tree(const Graph& t) {
    return transitive_profile(t).max();
}

namespace {

// Children of `root` sorted ascending by (rooted value, id); the suffix of
// size z is the canonical ladder selection.
struct Selection {
    std::vector<std::pair<int, int>> asc; // (value, child)
    int z = 0;

    int first_chosen() const { return static_cast<int>(asc.size()) - z; }
    int rung_value(int rung) const { return asc[first_chosen() + rung - 1].first; }
};

Selection select_children(const std::vector<int>& dp, const std::vector<int>& kids) {
    Selection s;
    for (int c : kids) s.asc.emplace_back(dp[c], c);
    std::sort(s.asc.begin(), s.asc.end());
    std::vector<int> vals;
    for (auto& [v, c] : s.asc) vals.push_back(v);
    s.z = ladder(vals).z;
    return s;
}

// 1-based rung of `target` in the selection, swapping it in for an
// equal-value chosen child if needed. 0 when target cannot be selected.
int rung_of(Selection& s, int target, int target_value) {
    int lo = s.first_chosen();
    int cnt = static_cast<int>(s.asc.size());
    for (int i = lo; i < cnt; ++i)
        if (s.asc[i].second == target) return i - lo + 1;
    for (int i = lo; i < cnt; ++i)
        if (s.asc[i].first == target_value) {
            for (int p = 0; p < lo; ++p)
                if (s.asc[p].second == target) std::swap(s.asc[p].second, s.asc[i].second);
            return i - lo + 1;
        }
    return 0;
}

VertexSet band_for_rung(const Selection& s, const std::vector<int>& dp,
                        const std::vector<int>& kids, int target, int j) {
    int z = s.z;
    int l_target = dp[target];
    VertexSet out;
    for (int p = j; p <= std::min(l_target, z); ++p) out.push_back(p);
    if (j >= 2) {
        int low_from = 0;
        std::vector<char> selected_child(kids.size(), 0);
        bool outside_support = false;
        {
            std::vector<int> chosen_ids;
            for (int i = s.first_chosen(); i < static_cast<int>(s.asc.size()); ++i)
                chosen_ids.push_back(s.asc[i].second);
            for (int c : kids)
                if (std::find(chosen_ids.begin(), chosen_ids.end(), c) == chosen_ids.end() &&
                    dp[c] >= j)
                    outside_support = true;
        }
        if (outside_support) {
            low_from = 1;
        } else {
            // minimal r with l_{i_t} >= t+1 for all r <= t <= j-1
            int r = j;
            for (int t = j - 1; t >= 1; --t) {
                if (s.rung_value(t) >= t + 1)
                    r = t;
                else
                    break;
            }
            if (r <= j - 1) low_from = r;
        }
        if (low_from >= 1) {
            VertexSet low;
            for (int p = low_from; p <= j - 1; ++p) low.push_back(p);
            low.insert(low.end(), out.begin(), out.end());
            out = std::move(low);
        }
    }
    return out;
}

// Band of admissible indices for `target`, a child of `root` in `tree`, in
// transitive partitions placing root at its rooted value. Returns the
// canonical rung through `rung`.
VertexSet anchor_band(const Graph& tree, int root, int target, int* rung = nullptr) {
    auto rt = root_at(tree, root);
    auto dp = rooted_values(rt);
    const auto& kids = rt.children[root];
    if (std::find(kids.begin(), kids.end(), target) == kids.end())
        throw std::invalid_argument("anchor band: target is not a child of the root");
    Selection s = select_children(dp, kids);
    int j = rung_of(s, target, dp[target]);
    if (j == 0)
        throw std::logic_error("anchor band: required child is not on the ladder");
    if (rung) *rung = j;
    return band_for_rung(s, dp, kids, target, j);
}

int pruned_value(const Graph& t, int c, int cp) {
    auto pt = pruned_tree(t, c, cp);
    auto rt = root_at(pt.graph, pt.new_id[c]);
    return rooted_values(rt)[pt.new_id[c]];
}

int whole_tree_value(const Graph& t, int v) {
    auto rt = root_at(t, v);
    return rooted_values(rt)[v];
}

// Interior vertices of a requirement get the unique index
// t(x_j, T^{[x_j, x_{j-1}]}); the final vertex gets its ladder band computed
// in the previous vertex's forward tree.
void fill_requirement_indices(const Graph& t, PathRequirement& req) {
    size_t len = req.vertices.size();
    for (size_t j = 1; j + 1 < len; ++j) {
        int p = pruned_value(t, req.vertices[j], req.vertices[j - 1]);
        req.allowed.push_back({p});
    }
    if (len >= 2) {
        int root = req.vertices[len - 2];
        int target = req.vertices[len - 1];
        if (len == 2) {
            req.allowed.push_back(anchor_band(t, root, target));
        } else {
            auto pt = pruned_tree(t, root, req.vertices[len - 3]);
            req.allowed.push_back(anchor_band(pt.graph, pt.new_id[root], pt.new_id[target]));
        }
    }
}

} // namespace

VertexSet allowed_indices_at_anchor(const RootedTree& rt, int x, int target_child, int j) {
    if (x != rt.root) throw std::invalid_argument("allowed_indices_at_anchor: x must be the root");
    auto dp = rooted_values(rt);
    const auto& kids = rt.children[x];
    if (std::find(kids.begin(), kids.end(), target_child) == kids.end())
        throw std::invalid_argument("allowed_indices_at_anchor: not a child of x");
    Selection s = select_children(dp, kids);
    int canonical = rung_of(s, target_child, dp[target_child]);
    if (canonical == 0 || canonical != j)
        throw std::invalid_argument("allowed_indices_at_anchor: child is not the j-th selected "
                                    "ladder child");
    return band_for_rung(s, dp, kids, target_child, j);
}

const VertexSet* PathRequirement::find(int v) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return &allowed[i];
    return nullptr;
}

PathRequirement compute_X(const Graph& t, int y, int z, int k) {
    if (t.has_edge(y, z)) throw std::invalid_argument("compute_X: y adjacent to z");
    int ty = whole_tree_value(t, y);
    if (ty < k - 1) throw std::invalid_argument("compute_X: t(y,T) < k-1");
    PathRequirement req;
    req.y = y;
    req.z = z;
    req.k = k;
    req.vertices = {y};
    req.allowed = {{k - 1}};
    if (ty >= k) return req;
    auto path = tree_path(t, y, z);
    for (size_t idx = 1; idx < path.size(); ++idx) {
        if (pruned_value(t, y, path[idx]) != k - 2) break;
        req.vertices.push_back(path[idx]);
    }
    req.allowed.resize(1);
    fill_requirement_indices(t, req);
    return req;
}

PathRequirement compute_Y(const Graph& t, int y, int z, int k) {
    int tz = whole_tree_value(t, z);
    if (tz != k) throw std::invalid_argument("compute_Y: t(z,T) != k");
    PathRequirement req;
    req.y = y;
    req.z = z;
    req.k = k;
    req.vertices = {z};
    req.allowed = {{k}};
    auto path = tree_path(t, y, z); // y first; walk from z's side toward y
    for (size_t step = 1; step < path.size(); ++step) {
        int s = path[path.size() - 1 - step];
        if (pruned_value(t, z, s) != k - 1) break;
        req.vertices.push_back(s);
    }
    req.allowed.resize(1);
    fill_requirement_indices(t, req);
    return req;
}

bool agrees(const PathRequirement& xreq, const PathRequirement& yreq) {
    if (xreq.y != yreq.y || xreq.z != yreq.z || xreq.k != yreq.k)
        throw std::invalid_argument("agrees: requirements from different (y, z, k)");
    for (size_t i = 0; i < xreq.vertices.size(); ++i) {
        const VertexSet* other = yreq.find(xreq.vertices[i]);
        if (!other) continue;
        const VertexSet& mine = xreq.allowed[i];
        bool common = false;
        for (int p : mine)
            if (std::binary_search(other->begin(), other->end(), p)) {
                common = true;
                break;
            }
        if (!common) return false;
    }
    return true;
}

OrderedPartition place_root_at(const Graph& t, int root, int p) {
    auto rt = root_at(t, root);
    auto dp = rooted_values(rt);
    if (p < 1 || p > dp[root])
        throw std::invalid_argument("place_root_at: p exceeds the rooted transitive number");
    std::vector<int> part(t.n(), 0);
    std::vector<std::pair<int, int>> stack{{root, p}};
    while (!stack.empty()) {
        auto [v, target] = stack.back();
        stack.pop_back();
        part[v] = target;
        if (target == 1) {
            // the whole subtree can sit in V_1
            for (int c : rt.children[v]) stack.emplace_back(c, 1);
            continue;
        }
        Selection s = select_children(dp, rt.children[v]);
        int cnt = static_cast<int>(s.asc.size());
        // the top target-1 selected children serve rungs 1..target-1
        std::vector<char> used(cnt, 0);
        for (int j = 1; j <= target - 1; ++j) {
            int idx = cnt - (target - 1) + j - 1;
            used[idx] = 1;
            stack.emplace_back(s.asc[idx].second, j);
        }
        for (int idx = 0; idx < cnt; ++idx)
            if (!used[idx]) stack.emplace_back(s.asc[idx].second, 1);
    }
    OrderedPartition out;
    out.parts.resize(p);
    for (int v = 0; v < t.n(); ++v) out.parts[part[v] - 1].push_back(v);
    return out;
}

namespace {

// Tournament witness of size k-1: a minimal placement rooted at a vertex of
// transitive number k gives parts where every vertex of V_j (j >= 2) has its
// parent strictly higher, so no back-domination survives merging V_k into V_1.
OrderedPartition merge_witness(const Graph& t, const TransitiveProfile& prof) {
    int k = prof.max();
    int root = 0;
    for (int v = 0; v < t.n(); ++v)
        if (prof.values[v] == k) {
            root = v;
            break;
        }
    auto placed = place_root_at(t, root, k);
    OrderedPartition out;
    out.parts.push_back(placed.parts[0]);
    auto& first = out.parts[0];
    first.insert(first.end(), placed.parts[k - 1].begin(), placed.parts[k - 1].end());
    std::sort(first.begin(), first.end());
    for (int j = 2; j <= k - 1; ++j) out.parts.push_back(placed.parts[j - 1]);
    return out;
}

// Disjoint X and Y split the tree along two path edges; placing y at k-1 in
// its side and z at k in the other gives the witness directly.
std::optional<OrderedPartition> disjoint_case_witness(const Graph& t, const PathRequirement& X,
                                                      const PathRequirement& Y, int k) {
    auto path = tree_path(t, X.y, X.z);
    auto pos_of = [&](int v) {
        return static_cast<int>(std::find(path.begin(), path.end(), v) - path.begin());
    };
    int a = pos_of(X.vertices.back());
    int b = pos_of(Y.vertices.back());
    if (a >= b) return std::nullopt; // requirements overlap, not this case

    auto t1 = pruned_tree(t, X.y, path[a + 1]);
    auto t2 = pruned_tree(t, X.z, path[b - 1]);
    {
        auto rt1 = root_at(t1.graph, t1.new_id[X.y]);
        if (rooted_values(rt1)[t1.new_id[X.y]] < k - 1) return std::nullopt;
        auto rt2 = root_at(t2.graph, t2.new_id[X.z]);
        if (rooted_values(rt2)[t2.new_id[X.z]] != k) return std::nullopt;
    }
    auto p1 = place_root_at(t1.graph, t1.new_id[X.y], k - 1);
    auto p2 = place_root_at(t2.graph, t2.new_id[X.z], k);

    OrderedPartition out;
    out.parts.resize(k);
    for (int j = 0; j < k - 1; ++j)
        for (int v : p1.parts[j]) out.parts[j].push_back(t1.old_id[v]);
    for (int j = 0; j < k; ++j)
        for (int v : p2.parts[j]) out.parts[j].push_back(t2.old_id[v]);
    for (int v = 0; v < t.n(); ++v)
        if (t1.new_id[v] == -1 && t2.new_id[v] == -1) out.parts[0].push_back(v);
    for (auto& part : out.parts) std::sort(part.begin(), part.end());
    if (!is_tournament_transitive(t, out).ok) return std::nullopt;
    return out;
}

struct CandidatePair {
    int y, z;
};

std::vector<CandidatePair> candidate_pairs(const Graph& t, const TransitiveProfile& prof, int k) {
    std::vector<int> zs;
    for (int v = t.n() - 1; v >= 0; --v)
        if (prof.values[v] == k) zs.push_back(v);
    std::vector<CandidatePair> pairs;
    for (int z : zs) {
        std::vector<int> ys;
        for (int y = t.n() - 1; y >= 0; --y)
            if (y != z && prof.values[y] >= k - 1 && !t.has_edge(y, z)) ys.push_back(y);
        std::stable_sort(ys.begin(), ys.end(),
                         [&](int a, int b) { return prof.values[a] > prof.values[b]; });
        for (int y : ys) pairs.push_back({y, z});
    }
    return pairs;
}

bool pair_passes(const Graph& t, int y, int z, int k) {
    auto X = compute_X(t, y, z, k);
    auto Y = compute_Y(t, y, z, k);
    return agrees(X, Y);
}

SolveReport tree_solve(const Graph& t, bool want_witness, bool parallel) {
    if (!is_tree(t)) throw std::invalid_argument("tournament_transitivity_tree: not a tree");
    TransitiveProfile prof = parallel ? transitive_profile(t) : transitive_profile_serial(t);
    int k = prof.max();
    SolveReport r;
    r.method = SolveMethod::TreeAlgorithm;

    if (k <= 2) {
        // K_1 or a star
        r.value = (t.n() <= 2) ? 1 : 2;
        r.lower = std::max(1, k - 1);
        r.upper = k;
        if (want_witness) {
            if (r.value == 1) {
                r.witness.parts.emplace_back(t.n());
                std::iota(r.witness.parts[0].begin(), r.witness.parts[0].end(), 0);
            } else {
                int leaf = 0;
                for (int v = 0; v < t.n(); ++v)
                    if (t.degree(v) == 1) leaf = v;
                VertexSet rest;
                for (int v = 0; v < t.n(); ++v)
                    if (v != leaf) rest.push_back(v);
                r.witness.parts = {rest, {leaf}};
            }
        }
        return r;
    }

    r.lower = k - 1;
    r.upper = k;
    auto pairs = candidate_pairs(t, prof, k);
    long long found = -1;

    if (!parallel) {
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (pair_passes(t, pairs[i].y, pairs[i].z, k)) {
                found = static_cast<long long>(i);
                break;
            }
        }
    } else {
#ifdef _OPENMP
        // block size trades early-exit granularity for parallel width; the
        // found pair is the canonical-first one regardless
        const size_t block = std::max<size_t>(8, 8 * static_cast<size_t>(omp_get_max_threads()));
        std::exception_ptr err;
        for (size_t start = 0; start < pairs.size() && found < 0 && !err; start += block) {
            size_t end = std::min(start + block, pairs.size());
            std::vector<char> hit(end - start, 0);
#pragma omp parallel for schedule(dynamic)
            for (long long i = static_cast<long long>(start); i < static_cast<long long>(end); ++i) {
                try {
                    hit[i - start] = pair_passes(t, pairs[i].y, pairs[i].z, k) ? 1 : 0;
                } catch (...) {
#pragma omp critical
                    err = std::current_exception();
                }
            }
            if (err) break;
            for (size_t i = start; i < end; ++i)
                if (hit[i - start]) {
                    found = static_cast<long long>(i);
                    break;
                }
        }
        if (err) std::rethrow_exception(err);
#else
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (pair_passes(t, pairs[i].y, pairs[i].z, k)) {
                found = static_cast<long long>(i);
                break;
            }
        }
#endif
    }

    r.value = found >= 0 ? k : k - 1;
    r.nodes_explored = found >= 0 ? found + 1 : static_cast<long long>(pairs.size());

    if (want_witness) {
        std::optional<OrderedPartition> witness;
        if (found >= 0) {
            auto X = compute_X(t, pairs[found].y, pairs[found].z, k);
            auto Y = compute_Y(t, pairs[found].y, pairs[found].z, k);
            bool disjoint = true;
            for (int v : X.vertices)
                if (Y.find(v)) disjoint = false;
            if (disjoint) witness = disjoint_case_witness(t, X, Y, k);
        } else {
            auto merged = merge_witness(t, prof);
            if (is_tournament_transitive(t, merged).ok) witness = std::move(merged);
        }
        if (!witness) {
            if (t.n() > 64)
                throw std::runtime_error("tournament_transitivity_tree: witness construction for "
                                         "this case needs the restricted search (n <= 64)");
            FeasibilityRequest req;
            req.k = r.value;
            req.tournament = true;
            witness = find_partition(t, req);
            if (!witness)
                throw std::logic_error("tournament_transitivity_tree: no witness at the decided "
                                       "value; the decision procedure is wrong");
        }
        r.witness = std::move(*witness);
    }
    return r;
}

} // namespace

SolveReport tournament_transitivity_tree(const Graph& t, bool want_witness) {
    return tree_solve(t, want_witness, true);
}

SolveReport tournament_transitivity_tree_serial(const Graph& t, bool want_witness) {
    return tree_solve(t, want_witness, false);
}

} // namespace ttr
