#include "ttr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ttr {

std::string to_string(SolveMethod m) {
    switch (m) {
    case SolveMethod::Oracle: return "oracle";
    case SolveMethod::ClosedForm: return "closed-form";
    case SolveMethod::TreeAlgorithm: return "tree-algorithm";
    case SolveMethod::BcgTheorem: return "bcg-theorem";
    }
    return "?";
}

std::pair<int, int> bounds_ttr(const Graph& g) {
    int lower = 1;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 3) continue;
        if (has_induced_p3(induced_subgraph(g, comp).graph)) {
            lower = 2;
            break;
        }
    }
    int upper = std::min({g.max_degree() + 1, g.n() - g.min_degree(), (g.n() + 1) / 2});
    upper = std::max(upper, 1);
    return {lower, upper};
}

namespace {

// Backtracking assignment of vertices to parts 1..k. Forward domination is
// enforced incrementally: a vertex placed in part p must end up with a
// neighbor in every part below p, so the number of parts still missing one
// can never exceed its count of unassigned neighbors. The tournament
// condition and any leaf_filter are only decidable on completed assignments
// and are checked there.
class Searcher {
public:
    Searcher(const Graph& g, const FeasibilityRequest& req)
        : g_(g), k_(req.k), tournament_(req.tournament), leaf_filter_(req.leaf_filter) {
        int n = g.n();
        if (n > 64) throw std::runtime_error("assignment search supports at most 64 vertices");
        if (k_ < 1 || k_ > n) throw std::invalid_argument("find_partition: k out of range");
        adj_.resize(n);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj_[v] |= 1ULL << w;
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        part_of_.assign(n, 0);
        need_.assign(n, 0);
        free_.assign(n, 0);
        for (int v = 0; v < n; ++v) free_[v] = g.degree(v);
        part_mask_.assign(k_ + 1, 0);
        part_cnt_.assign(k_ + 1, 0);
        cap_.assign(k_ + 1, n);
        fixed_.assign(n, 0);
        for (auto [v, p] : req.fixed_parts) {
            if (v < 0 || v >= n || p < 1 || p > k_)
                throw std::invalid_argument("find_partition: bad fixed part");
            fixed_[v] = p;
        }
        for (auto [p, cap] : req.part_caps) {
            if (p < 1 || p > k_) throw std::invalid_argument("find_partition: bad part cap");
            cap_[p] = cap;
        }
        unassigned_ = n;
        empty_parts_ = k_;
    }

    std::optional<OrderedPartition> run() {
        if (assign(0)) return snapshot();
        return std::nullopt;
    }

    long long nodes() const { return nodes_; }

private:
    OrderedPartition snapshot() const {
        OrderedPartition p;
        p.parts.resize(k_);
        for (int v = 0; v < g_.n(); ++v) p.parts[part_of_[v] - 1].push_back(v);
        return p;
    }

    bool leaf_ok() {
        if (tournament_) {
            for (int i = 1; i <= k_; ++i)
                for (int j = i + 1; j <= k_; ++j) {
                    bool free_vertex = false;
                    for (uint64_t m = part_mask_[i]; m; m &= m - 1) {
                        int x = std::countr_zero(m);
                        if ((adj_[x] & part_mask_[j]) == 0) {
                            free_vertex = true;
                            break;
                        }
                    }
                    if (!free_vertex) return false;
                }
        }
        if (leaf_filter_ && !leaf_filter_(snapshot())) return false;
        return true;
    }

    bool assign(int idx) {
        if (idx == static_cast<int>(order_.size())) return leaf_ok();
        int v = order_[idx];
        int lo = fixed_[v] ? fixed_[v] : 1;
        int hi = fixed_[v] ? fixed_[v] : std::min(k_, g_.degree(v) + 1);
        for (int p = lo; p <= hi; ++p) {
            ++nodes_;
            if (part_cnt_[p] >= cap_[p]) continue;
            int empties_after = empty_parts_ - (part_cnt_[p] == 0 ? 1 : 0);
            if (empties_after > unassigned_ - 1) continue; // cannot fill remaining parts

            uint32_t below = 0;
            for (uint64_t m = adj_[v]; m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (part_of_[w] && part_of_[w] < p) below |= 1u << (part_of_[w] - 1);
            }
            uint32_t need_v = (p > 1 ? (1u << (p - 1)) - 1 : 0) & ~below;
            if (std::popcount(need_v) > free_[v]) continue;

            need_[v] = need_v;
            part_of_[v] = p;
            part_mask_[p] |= 1ULL << v;
            if (part_cnt_[p]++ == 0) --empty_parts_;
            --unassigned_;

            bool viable = true;
            size_t mark = trail_.size();
            for (uint64_t m = adj_[v]; m; m &= m - 1) {
                int u = std::countr_zero(m);
                --free_[u];
                if (part_of_[u]) {
                    trail_.push_back({u, need_[u]});
                    if (p < part_of_[u]) need_[u] &= ~(1u << (p - 1));
                    if (std::popcount(need_[u]) > free_[u]) viable = false;
                }
            }

            if (viable && assign(idx + 1)) return true;

            while (trail_.size() > mark) {
                auto [u, old_need] = trail_.back();
                trail_.pop_back();
                need_[u] = old_need;
            }
            for (uint64_t m = adj_[v]; m; m &= m - 1) ++free_[std::countr_zero(m)];
            part_of_[v] = 0;
            part_mask_[p] &= ~(1ULL << v);
            if (--part_cnt_[p] == 0) ++empty_parts_;
            ++unassigned_;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    bool tournament_;
    std::function<bool(const OrderedPartition&)> leaf_filter_;
    std::vector<uint64_t> adj_;
    std::vector<int> order_;
    std::vector<int> part_of_;
    std::vector<uint32_t> need_; // parts below part_of_[v] still lacking a neighbor of v
    std::vector<int> free_;      // unassigned neighbors of v
    std::vector<uint64_t> part_mask_;
    std::vector<int> part_cnt_;
    std::vector<int> cap_;
    std::vector<int> fixed_;
    std::vector<std::pair<int, uint32_t>> trail_;
    int unassigned_ = 0;
    int empty_parts_ = 0;
    long long nodes_ = 0;
};

void check_cap(const Graph& g, int cap, const char* who) {
    if (g.n() > cap)
        throw std::runtime_error(std::string(who) + ": n=" + std::to_string(g.n()) +
                                 " exceeds oracle cap " + std::to_string(cap));
}

OrderedPartition single_part(const Graph& g) {
    OrderedPartition p;
    p.parts.emplace_back(g.n());
    std::iota(p.parts[0].begin(), p.parts[0].end(), 0);
    return p;
}

} // namespace

std::optional<OrderedPartition> find_partition(const Graph& g, const FeasibilityRequest& req,
                                               long long* nodes) {
    Searcher s(g, req);
    auto out = s.run();
    if (nodes) *nodes += s.nodes();
    return out;
}

SolveReport transitivity_exact(const Graph& g, int cap) {
    check_cap(g, cap, "transitivity_exact");
    SolveReport r;
    r.value = 1;
    r.witness = single_part(g);
    r.lower = 1;
    r.upper = std::min(g.n(), g.max_degree() + 1);
    for (int k = 2; k <= r.upper; ++k) {
        auto w = find_partition(g, {.k = k}, &r.nodes_explored);
        if (!w) break;
        r.value = k;
        r.witness = *w;
    }
    return r;
}

SolveReport tournament_transitivity_exact(const Graph& g, int cap) {
    check_cap(g, cap, "tournament_transitivity_exact");
    SolveReport r;
    r.value = 1;
    r.witness = single_part(g);
    std::tie(r.lower, r.upper) = bounds_ttr(g);
    for (int k = 2; k <= r.upper; ++k) {
        FeasibilityRequest req;
        req.k = k;
        req.tournament = true;
        auto w = find_partition(g, req, &r.nodes_explored);
        if (!w) break;
        r.value = k;
        r.witness = *w;
    }
    return r;
}

OrderedPartition normal_form_witness(const Graph& g, int cap) {
    if (!is_connected(g)) throw std::invalid_argument("normal_form_witness: graph not connected");
    auto base = tournament_transitivity_exact(g, cap);
    int k = base.value;
    if (k < 3)
        throw std::invalid_argument("normal_form_witness: requires TTr >= 3, got " + std::to_string(k));
    FeasibilityRequest req;
    req.k = k;
    req.tournament = true;
    req.part_caps = {{k, 1}, {k - 1, 2}};
    req.leaf_filter = [&](const OrderedPartition& p) {
        if (p.parts[k - 1].size() != 1 || p.parts[k - 2].size() != 2) return false;
        int z = p.parts[k - 1][0];
        int adj = 0;
        for (int x : p.parts[k - 2])
            if (g.has_edge(x, z)) ++adj;
        return adj == 1;
    };
    auto w = find_partition(g, req);
    if (!w)
        throw std::logic_error("normal_form_witness: no witness with |V_k|=1, |V_{k-1}|=2 exists; "
                               "this contradicts the normal-form property");
    return *w;
}

int transitive_number_exact(const Graph& g, int v, int cap) {
    check_cap(g, cap, "transitive_number_exact");
    if (v < 0 || v >= g.n()) throw std::invalid_argument("transitive_number_exact: bad vertex");
    int best = 1;
    for (int p = 2; p <= std::min(g.n(), g.degree(v) + 1); ++p) {
        FeasibilityRequest req;
        req.k = p;
        req.fixed_parts = {{v, p}};
        if (!find_partition(g, req)) break;
        best = p;
    }
    return best;
}

} // namespace ttr
