#pragma once
// outsets.hpp - shape of Out(g,n), Frobenius numbers of cofinite Out sets,
// membership prefixes and In(g,n) searches.

#include "arcgraph/arcs.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace arcgraph {

/// Out(g,n) = N.
struct FullOut {
    std::string reason;
};
/// Out(g,n) = {u >= min_u}, min_u >= 2.
struct ExactTail {
    u64 min_u = 0;
};
/// Out(s_b,n) with gcd(b-1,n) = 1 and a prime of n not dividing b: cofinite but not N.
struct CofiniteComputed {
    u64 frobenius = 0;     // largest u not in Out
    u64 proven_bound = 0;  // (a-1)(l-1); every u at or above it is in Out
};

enum class EqualityStatus { Established, StrictWitness, UndecidedWithinBound };

/// Out(s_b,n) is inside the multiples of d = gcd(b-1,n) > 1.
struct ResidueConstrained {
    u64 d = 0;
    EqualityStatus equality = EqualityStatus::UndecidedWithinBound;
    std::optional<u64> strict_witness;  // a multiple of d refuted by the exact DP
    u64 horizon = 0;                    // multiples of d checked up to this u
};
/// Infinite, not cofinite (tau for n neither 1 nor a prime power). minimum = tau(n).
struct InfiniteNotCofinite {
    u64 minimum = 0;
};

using OutCharacterization = std::variant<FullOut, ExactTail, CofiniteComputed, ResidueConstrained, InfiniteNotCofinite>;

std::string characterization_name(const OutCharacterization& c);
std::string to_string(EqualityStatus s);

/// Strictness sweeps for d > 1 look at multiples of d up to horizon_factor * d.
inline constexpr u64 kDefaultStrictHorizonFactor = 50;

OutCharacterization classify_out(const FunctionId& f, u64 n, const ExplorationBudget& budget = {},
                                 u64 horizon_factor = kDefaultStrictHorizonFactor);

/// None when Out = N; NoFrobeniusNumber when Out is not cofinite or the function is unclassified.
std::optional<u64> frobenius_of_out(const FunctionId& f, u64 n, const ExplorationBudget& budget = {});

enum class Membership { Member, NonMember, Unknown };

struct MembershipEntry {
    u64 u = 0;
    Membership verdict = Membership::Unknown;
    ArcVerdict evidence;
};

struct MembershipPrefix {
    FunctionId f;
    u64 n = 0;
    std::vector<MembershipEntry> entries;

    std::vector<Membership> verdicts() const;
};

Membership membership_of(const ArcVerdict& v);
std::string to_string(Membership m);

/// Verdict for every u in [1, u_max] of u in Out(g,n).
MembershipPrefix enumerate_out_prefix(const FunctionId& f, u64 n, u64 u_max, const ExplorationBudget& budget = {});

/// Verdict for every u in [1, u_max] of u -> n, i.e. n in Out(g,u).
MembershipPrefix in_search(const FunctionId& f, u64 n, u64 u_max, const ExplorationBudget& budget = {});

}  // namespace arcgraph
