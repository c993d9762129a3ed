#include "arcgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace arcgraph {

namespace {

// Cheap certificates before any DP or tuple search.
ArcVerdict edge_verdict(const FunctionId& f, u64 n, u64 u, const ExplorationBudget& budget) {
    if (f.kind() == FunctionKind::SumDigits) {
        if (auto cert = sb_residue_refutation(f.base(), n, u)) return Refuted{*cert};
    } else if (f.needs_factorization()) {
        if (const u64 m = out_minimum(f, n); u < m) return Refuted{BelowMinimumCert{m}};
    }
    return decide_arc(f, n, u, budget);
}

struct ChainSearch {
    const FunctionId& f;
    u64 k;
    const ExplorationBudget& budget;
    u64 nodes = 0;

    struct Best {
        u64 length = 0;  // arcs in the best chain from here
        u64 next = 0;
        u64 witness = 0;
    };
    std::map<std::pair<u64, u64>, Best> memo{};
    std::map<u64, std::vector<std::pair<u64, u64>>> successor_cache{};

    const std::vector<std::pair<u64, u64>>& successors(u64 a) {
        auto it = successor_cache.find(a);
        if (it != successor_cache.end()) return it->second;
        std::map<u64, u64> first_witness;
        const u128 limit = static_cast<u128>(a) * k;
        if (limit > UINT64_MAX || (f.needs_factorization() && limit > budget.input_cap)) {
            throw CapExceeded("k * a exceeds the cap while extending a chain");
        }
        for (u64 j = 1; j <= k; ++j) {
            const u64 N = a * j;
            const u64 v = eval_small(f, N);
            if (v > a) first_witness.emplace(v, N);
        }
        std::vector<std::pair<u64, u64>> out(first_witness.begin(), first_witness.end());
        return successor_cache.emplace(a, std::move(out)).first->second;
    }

    Best best_from(u64 a, u64 remaining) {
        if (remaining == 0 || ++nodes > budget.search_node_cap) return {};
        const auto key = std::make_pair(a, remaining);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Best best;
        for (const auto& [v, N] : successors(a)) {
            const Best sub = best_from(v, remaining - 1);
            if (sub.length + 1 > best.length) best = {sub.length + 1, v, N};
        }
        memo.emplace(key, best);
        return best;
    }
};

}  // namespace

std::string to_string(Friendship f) {
    switch (f) {
        case Friendship::Friends: return "friends";
        case Friendship::NotFriends: return "not-friends";
        case Friendship::Unknown: return "unknown";
    }
    return "?";
}

FriendsResult friends(const FunctionId& f, u64 n, u64 u, const ExplorationBudget& budget) {
    FriendsResult r{decide_arc(f, n, u, budget), decide_arc(f, u, n, budget), Friendship::Unknown};
    if (is_proven(r.forward) && is_proven(r.backward)) {
        r.overall = Friendship::Friends;
    } else if (is_refuted(r.forward) || is_refuted(r.backward)) {
        r.overall = Friendship::NotFriends;
    }
    return r;
}

ArcVerdict congruence_arc(const FunctionId& f, u64 n, u64 r, u64 u, const ExplorationBudget& budget) {
    require_positive(n, "n");
    require_positive(u, "u");
    if (r >= n) throw PreconditionError("residue r must satisfy 0 <= r < n");
    if (r == 0) return decide_arc(f, n, u, budget);
    if (f.kind() == FunctionKind::SumDigits) return decide_sb_exact(f.base(), n, u, r, budget);

    u128 limit = static_cast<u128>(budget.oracle_k_max) * n;
    if (limit > UINT64_MAX) limit = UINT64_MAX;
    if (f.needs_factorization() && limit > budget.input_cap) limit = budget.input_cap;
    for (u64 N = r; N <= limit; N += n) {
        if (eval_small(f, N) == u) return Proven{Witness{to_natural(N), std::nullopt}};
        if (N > static_cast<u64>(limit) - n) break;
    }
    return Unknown{"no N = " + std::to_string(r) + " (mod " + std::to_string(n) + ") up to " +
                   std::to_string(static_cast<u64>(limit)) + " has g(N) = u"};
}

ArcVerdict k_bounded_arc(const FunctionId& f, u64 n, u64 u, u64 k, const ExplorationBudget& budget) {
    require_positive(k, "k");
    if (auto N = oracle_search(f, n, u, k, budget)) return Proven{Witness{*N, std::nullopt}};
    return Refuted{BoundedExhaustionCert{k}};
}

std::vector<ChainStep> k_bounded_chain(const FunctionId& f, u64 n, u64 k, u64 steps, const ExplorationBudget& budget) {
    require_positive(n, "n");
    require_positive(k, "k");
    std::vector<ChainStep> chain{{n, std::nullopt}};
    ChainSearch search{f, k, budget};
    u64 a = n;
    for (u64 left = steps; left > 0; --left) {
        const auto best = search.best_from(a, left);
        if (best.length == 0) break;
        chain.push_back({best.next, to_natural(best.witness)});
        a = best.next;
    }
    return chain;
}

std::vector<Polygon> find_polygons(const FunctionId& f, u64 vertex_bound, u64 length, const ExplorationBudget& budget) {
    if (length < 3) throw PreconditionError("polygons need length at least 3");
    require_positive(vertex_bound, "vertex_bound");
    std::vector<Polygon> out;
    if (length > vertex_bound) return out;

    const u64 V = vertex_bound;
    std::vector<std::optional<ArcVerdict>> matrix(static_cast<std::size_t>(V * V));
    auto edge = [&](u64 from, u64 to) -> const ArcVerdict& {
        auto& slot = matrix[(from - 1) * V + (to - 1)];
        if (!slot) slot = edge_verdict(f, from, to, budget);
        return *slot;
    };

    std::vector<u64> path;
    std::vector<bool> used(V + 1, false);
    auto dfs = [&](auto&& self, u64 start) -> void {
        if (out.size() >= budget.max_results) return;
        const u64 last = path.back();
        if (path.size() == length) {
            if (is_proven(edge(last, start))) {
                Polygon p{path, {}};
                for (std::size_t i = 0; i < path.size(); ++i) {
                    const u64 a = path[i];
                    const u64 b = path[(i + 1) % path.size()];
                    p.edges.push_back({a, b, edge(a, b)});
                }
                out.push_back(std::move(p));
            }
            return;
        }
        for (u64 next = start + 1; next <= V; ++next) {
            if (used[next] || !is_proven(edge(last, next))) continue;
            used[next] = true;
            path.push_back(next);
            self(self, start);
            path.pop_back();
            used[next] = false;
        }
    };
    for (u64 start = 1; start <= V && out.size() < budget.max_results; ++start) {
        path = {start};
        used.assign(V + 1, false);
        used[start] = true;
        dfs(dfs, start);
    }
    return out;
}

std::vector<ArcEdge> subgraph_export(const FunctionId& f, u64 vertex_bound, const ExplorationBudget& budget) {
    std::vector<ArcEdge> edges;
    for (u64 n = 1; n <= vertex_bound; ++n) {
        for (u64 u = 1; u <= vertex_bound; ++u) {
            if (n != u) edges.push_back({n, u, edge_verdict(f, n, u, budget)});
        }
    }
    return edges;
}

}  // namespace arcgraph
