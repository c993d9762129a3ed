#pragma once
// graph.hpp - bounded exploration of the arc graph G = (N, E_g).

#include "arcgraph/arcs.hpp"

#include <optional>
#include <vector>

namespace arcgraph {

struct ArcEdge {
    u64 from = 0;
    u64 to = 0;
    ArcVerdict verdict;
};

/// Directed cycle v_1 -> v_2 -> ... -> v_k -> v_1 with distinct vertices, every edge Proven.
struct Polygon {
    std::vector<u64> vertices;
    std::vector<ArcEdge> edges;
};

enum class Friendship { Friends, NotFriends, Unknown };

struct FriendsResult {
    ArcVerdict forward;   // n -> u
    ArcVerdict backward;  // u -> n
    Friendship overall = Friendship::Unknown;
};

std::string to_string(Friendship f);

FriendsResult friends(const FunctionId& f, u64 n, u64 u, const ExplorationBudget& budget = {});

/// Some N = r (mod n) with g(N) = u. Exact for s_b; bounded scan of N <= oracle_k_max*n otherwise.
ArcVerdict congruence_arc(const FunctionId& f, u64 n, u64 r, u64 u, const ExplorationBudget& budget = {});

/// Some N in {n, ..., k*n} with g(N) = u; Refuted means only that no k-bounded arc exists.
ArcVerdict k_bounded_arc(const FunctionId& f, u64 n, u64 u, u64 k, const ExplorationBudget& budget = {});

struct ChainStep {
    u64 value = 0;
    std::optional<Natural> witness;  // N certifying the arc from the previous value
};

/// Longest strictly increasing chain n = a_1 < a_2 < ... (at most `steps` arcs)
/// where each step has a k-bounded arc. Ties go to the smallest next value.
std::vector<ChainStep> k_bounded_chain(const FunctionId& f, u64 n, u64 k, u64 steps,
                                       const ExplorationBudget& budget = {});

/// Cycles of the given length over 1..vertex_bound, smallest vertex first, in lexicographic order.
std::vector<Polygon> find_polygons(const FunctionId& f, u64 vertex_bound, u64 length,
                                   const ExplorationBudget& budget = {});

/// Verdict for every ordered pair (n, u), n != u, both at most vertex_bound, row-major.
std::vector<ArcEdge> subgraph_export(const FunctionId& f, u64 vertex_bound, const ExplorationBudget& budget = {});

}  // namespace arcgraph
