#pragma once
// arcs.hpp - deciding n -> u (some multiple N of n has g(N) = u), building
// witnesses from the constructive proofs and refuting arcs with checkable
// certificates.

#include "arcgraph/function.hpp"
#include "arcgraph/verdict.hpp"

#include <optional>
#include <vector>

namespace arcgraph {

/// True iff n | N and g(N) = u. Divisor-type functions use the witness factorization when present.
bool verify_arc_witness(const FunctionId& f, u64 n, u64 u, const Witness& w, const ExplorationBudget& budget = {});
/// True iff N = r (mod n) and g(N) = u.
bool verify_congruence_witness(const FunctionId& f, u64 n, u64 r, u64 u, const Witness& w,
                               const ExplorationBudget& budget = {});

// -- sum of digits ------------------------------------------------------------

/// Two multiples of n whose digit sums a = n and l = n-1+b are coprime.
struct SbWitnessPair {
    u64 b = 0;
    u64 n = 0;
    Natural A;
    Natural B;
    u64 a = 0;    // s_b(A)
    u64 ell = 0;  // s_b(B)
    u64 c = 0;    // largest exponent of a prime of b in n
    u64 m = 0;    // part of n coprime to b
    u64 phi_m = 0;
};

/// Requires gcd(b-1, n) = 1, n >= 2 and not (b = 2 and n a power of 2).
SbWitnessPair construct_sb_pair(u64 b, u64 n, const ExplorationBudget& budget = {});

struct CoinRepresentation {
    u64 x = 0;
    u64 y = 0;
};

/// a*x + ell*y = u with the smallest y. PreconditionError if gcd(a, ell) != 1,
/// NotRepresentable if no non-negative solution exists.
CoinRepresentation solve_coin_representation(u64 a, u64 ell, u64 u);

/// (a-1)(l-1) for the pair of (b, n): every u at or above it is in Out(s_b, n) when gcd(b-1, n) = 1.
u64 sb_cofinite_threshold(u64 b, u64 n);

/// x copies of A followed by y copies of B, with (x, y) from the coin representation of u.
Natural sb_concatenation_witness(const SbWitnessPair& pair, u64 u, const ExplorationBudget& budget = {});

/// k copies of n concatenated in base b; its digit sum is k*s_b(n).
Natural sb_repetition_witness(u64 b, u64 n, u64 k);

/// ResidueClass refutation when gcd(b-1, n) does not divide u.
std::optional<ResidueClassCert> sb_residue_refutation(u64 b, u64 n, u64 u);

/// Exact answer to "some N = r (mod n) has s_b(N) = u"; Unknown only when the DP budget is exceeded.
ArcVerdict decide_sb_exact(u64 b, u64 n, u64 u, u64 r, const ExplorationBudget& budget = {});

/// Constructive dispatch: n = 1, full case, repetition, pair concatenation, then the exact DP.
ArcVerdict witness_sb(u64 b, u64 n, u64 u, const ExplorationBudget& budget = {});

// -- divisor function -----------------------------------------------------------

struct TauDecision {
    bool member = false;
    /// c_i for each prime of n (in factorization order), when member.
    std::vector<u64> slots;
    /// u / prod c_i, realized by a single fresh prime q^(cofactor-1) when >= 2.
    u64 cofactor = 1;
    u64 tuples_searched = 0;
};

/// u in Out(tau, n) iff there are c_i >= n_i + 1 with prod c_i | u. Among all
/// such tuples the one giving the smallest N is reported.
TauDecision decide_tau_exact(u64 n, u64 u, const ExplorationBudget& budget = {});

/// Fast path u = 2^l * tau(n) gives n times l fresh primes; otherwise the decider's tuple.
ArcVerdict witness_tau(u64 n, u64 u, const ExplorationBudget& budget = {});

// -- prime counting functions -----------------------------------------------------

/// Out(omega, n) = {u >= omega(n)} and Out(Omega, n) = {u >= Omega(n)}.
ArcVerdict decide_prime_count_arc(const FunctionId& f, u64 n, u64 u, const ExplorationBudget& budget = {});

// -- generic --------------------------------------------------------------------

/// Smallest N in {n, 2n, ..., k_max*n} with g(N) = u.
std::optional<Natural> oracle_search(const FunctionId& f, u64 n, u64 u, u64 k_max,
                                     const ExplorationBudget& budget = {});

ArcVerdict decide_arc(const FunctionId& f, u64 n, u64 u, const ExplorationBudget& budget = {});

/// Re-checks a refutation certificate for the query (f, n, u) by recomputation.
bool recheck_certificate(const FunctionId& f, u64 n, u64 u, const RefutationCertificate& cert,
                         const ExplorationBudget& budget = {});

/// Minimum of Out for the divisor-type functions: tau(n), omega(n) or Omega(n).
u64 out_minimum(const FunctionId& f, u64 n);

}  // namespace arcgraph
