#pragma once
// verdict.hpp - the answer type shared by every arc query, plus the budget
// that bounds searches.

#include "arcgraph/arith.hpp"

#include <optional>
#include <string>
#include <variant>

namespace arcgraph {

struct ExplorationBudget {
    u64 oracle_k_max = 10'000;         // multiples scanned by bounded searches
    u64 dp_state_cap = 10'000'000;     // (u+1)*n states in the digit-sum DP
    u64 max_witness_digits = 1'000'000;
    u64 input_cap = kDefaultInputCap;  // n, u, b and anything that must be factored
    u64 search_node_cap = 1'000'000;   // tau tuple search, chain search
    u64 max_results = 1'000;           // polygons returned

    void validate() const;
};

/// An explicit N; divisor-type witnesses carry the factorization they were built from.
struct Witness {
    Natural value;
    std::optional<Factorization> factorization;
};

/// d > 1, d | b-1, d | n, d does not divide u: u is outside the residue class Out must live in.
struct ResidueClassCert {
    u64 d = 0;
};

/// u is below the proven minimum of Out (tau(n), omega(n) or Omega(n)).
struct BelowMinimumCert {
    u64 minimum = 0;
};

/// The exact digit-sum DP over residues found no N = residue (mod modulus) with digit sum target.
struct ModularExhaustionCert {
    u64 base = 0;
    u64 modulus = 0;
    u64 target = 0;
    u64 residue = 0;
    u64 preperiod = 0;
    u64 period = 0;
};

/// No exponent tuple (c_i >= n_i + 1, prod c_i | u) exists.
struct TauExhaustionCert {
    u64 n = 0;
    u64 u = 0;
    u64 tuples_searched = 0;
};

/// None of n, 2n, ..., k*n has g(N) = u. Only refutes the k-bounded arc.
struct BoundedExhaustionCert {
    u64 k = 0;
};

using RefutationCertificate =
    std::variant<ResidueClassCert, BelowMinimumCert, ModularExhaustionCert, TauExhaustionCert, BoundedExhaustionCert>;

struct Proven {
    Witness witness;
};
struct Refuted {
    RefutationCertificate certificate;
};
struct Unknown {
    std::string budget_spent;
};

using ArcVerdict = std::variant<Proven, Refuted, Unknown>;

enum class VerdictKind { Proven, Refuted, Unknown };

inline VerdictKind kind_of(const ArcVerdict& v) { return static_cast<VerdictKind>(v.index()); }
inline bool is_proven(const ArcVerdict& v) { return std::holds_alternative<Proven>(v); }
inline bool is_refuted(const ArcVerdict& v) { return std::holds_alternative<Refuted>(v); }
inline bool is_unknown(const ArcVerdict& v) { return std::holds_alternative<Unknown>(v); }
/// Witness of a Proven verdict; throws std::bad_variant_access otherwise.
inline const Witness& witness_of(const ArcVerdict& v) { return std::get<Proven>(v).witness; }

std::string to_string(VerdictKind k);
/// Variant name: ResidueClass, BelowMinimum, ModularExhaustion, TauFactorizationExhaustion, BoundedExhaustion.
std::string certificate_name(const RefutationCertificate& c);
std::string describe(const RefutationCertificate& c);

}  // namespace arcgraph
