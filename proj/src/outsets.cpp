#include "arcgraph/outsets.hpp"
#include "arcgraph/sb_reachability.hpp"

#include <numeric>

namespace arcgraph {

namespace {

bool radical_divides(u64 b, u64 n) {
    for (const auto& pf : factorize(n).factors) {
        if (b % pf.prime != 0) return false;
    }
    return true;
}

// Largest u below the cofinite threshold that the exact DP rejects.
std::optional<u64> sb_frobenius(u64 b, u64 n, const ExplorationBudget& budget) {
    const u64 threshold = sb_cofinite_threshold(b, n);
    if (threshold <= 1) return std::nullopt;
    SbReachability dp(b, n, threshold - 1, budget.dp_state_cap);
    for (u64 u = threshold - 1; u >= 1; --u) {
        if (!dp.reachable(u, 0)) return u;
    }
    return std::nullopt;
}

ResidueConstrained sb_strictness(u64 b, u64 n, u64 d, u64 horizon_factor, const ExplorationBudget& budget) {
    ResidueConstrained rc;
    rc.d = d;
    if (digit_sum(n, b) == d) {
        rc.equality = EqualityStatus::Established;
        return rc;
    }
    const u64 dp_counts = budget.dp_state_cap / n;
    u64 horizon = dp_counts == 0 ? 0
                                 : static_cast<u64>(std::min<u128>(static_cast<u128>(horizon_factor) * d, dp_counts - 1));
    horizon -= horizon % d;
    rc.horizon = horizon;
    if (horizon < d) return rc;
    SbReachability dp(b, n, horizon, budget.dp_state_cap);
    for (u64 u = d; u <= horizon; u += d) {
        if (!dp.reachable(u, 0)) {
            rc.equality = EqualityStatus::StrictWitness;
            rc.strict_witness = u;
            return rc;
        }
    }
    return rc;
}

OutCharacterization tail_or_full(u64 min_u, std::string reason) {
    if (min_u <= 1) return FullOut{std::move(reason)};
    return ExactTail{min_u};
}

}  // namespace

std::string characterization_name(const OutCharacterization& c) {
    static const char* names[] = {"Full", "ExactTail", "CofiniteComputed", "ResidueConstrained", "InfiniteNotCofinite"};
    return names[c.index()];
}

std::string to_string(EqualityStatus s) {
    switch (s) {
        case EqualityStatus::Established: return "Established";
        case EqualityStatus::StrictWitness: return "StrictWitness";
        case EqualityStatus::UndecidedWithinBound: return "UndecidedWithinBound";
    }
    return "?";
}

OutCharacterization classify_out(const FunctionId& f, u64 n, const ExplorationBudget& budget, u64 horizon_factor) {
    require_positive(n, "n");
    if (n > budget.input_cap) throw CapExceeded("n exceeds the cap " + std::to_string(budget.input_cap));
    switch (f.kind()) {
        case FunctionKind::SumDigits: {
            const u64 b = f.base();
            const u64 d = std::gcd(b - 1, n);
            if (d == 1 && radical_divides(b, n)) {
                return FullOut{"gcd(b-1,n) = 1 and every prime divisor of n divides b"};
            }
            if (d == 1) {
                auto frob = sb_frobenius(b, n, budget);
                if (!frob) throw NoFrobeniusNumber("digit-sum DP found no gap below the cofinite threshold");
                return CofiniteComputed{*frob, sb_cofinite_threshold(b, n)};
            }
            return sb_strictness(b, n, d, horizon_factor, budget);
        }
        case FunctionKind::HappySum:
            throw PreconditionError("no characterization of Out is known for " + f.describe());
        case FunctionKind::Tau: {
            const auto pp = is_prime_power(n);
            if (pp && pp->k == 0) return FullOut{"n = 1"};
            if (pp) return ExactTail{pp->k + 1ULL};
            return InfiniteNotCofinite{out_minimum(f, n)};
        }
        case FunctionKind::Omega: return tail_or_full(out_minimum(f, n), "n is 1 or a prime power");
        case FunctionKind::BigOmega: return tail_or_full(out_minimum(f, n), "n is 1 or a prime");
    }
    throw PreconditionError("unsupported function");
}

std::optional<u64> frobenius_of_out(const FunctionId& f, u64 n, const ExplorationBudget& budget) {
    const auto c = classify_out(f, n, budget);
    if (std::holds_alternative<FullOut>(c)) return std::nullopt;
    if (const auto* t = std::get_if<ExactTail>(&c)) return t->min_u - 1;
    if (const auto* cc = std::get_if<CofiniteComputed>(&c)) return cc->frobenius;
    throw NoFrobeniusNumber("Out(" + f.describe() + ", " + std::to_string(n) + ") is " + characterization_name(c) +
                            ": no Frobenius number");
}

Membership membership_of(const ArcVerdict& v) {
    switch (kind_of(v)) {
        case VerdictKind::Proven: return Membership::Member;
        case VerdictKind::Refuted: return Membership::NonMember;
        case VerdictKind::Unknown: return Membership::Unknown;
    }
    return Membership::Unknown;
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::Member: return "member";
        case Membership::NonMember: return "non-member";
        case Membership::Unknown: return "unknown";
    }
    return "?";
}

std::vector<Membership> MembershipPrefix::verdicts() const {
    std::vector<Membership> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.verdict);
    return out;
}

MembershipPrefix enumerate_out_prefix(const FunctionId& f, u64 n, u64 u_max, const ExplorationBudget& budget) {
    require_positive(n, "n");
    MembershipPrefix prefix{f, n, {}};
    prefix.entries.reserve(u_max);
    auto push = [&](u64 u, ArcVerdict v) {
        const Membership m = membership_of(v);
        prefix.entries.push_back({u, m, std::move(v)});
    };

    if (f.kind() == FunctionKind::SumDigits && n <= budget.input_cap &&
        static_cast<u128>(u_max + 1) * n <= budget.dp_state_cap) {
        const u64 b = f.base();
        SbReachability dp(b, n, u_max, budget.dp_state_cap);
        const auto& op = dp.order();
        for (u64 u = 1; u <= u_max; ++u) {
            if (auto cert = sb_residue_refutation(b, n, u)) {
                push(u, Refuted{*cert});
                continue;
            }
            try {
                if (auto w = dp.witness(u, 0, budget.max_witness_digits)) {
                    push(u, Proven{Witness{*w, std::nullopt}});
                } else {
                    push(u, Refuted{ModularExhaustionCert{b, n, u, 0, op.preperiod, op.period}});
                }
            } catch (const CapExceeded& e) {
                push(u, Unknown{e.what()});
            }
        }
        return prefix;
    }
    for (u64 u = 1; u <= u_max; ++u) push(u, decide_arc(f, n, u, budget));
    return prefix;
}

MembershipPrefix in_search(const FunctionId& f, u64 n, u64 u_max, const ExplorationBudget& budget) {
    require_positive(n, "n");
    MembershipPrefix prefix{f, n, {}};
    prefix.entries.reserve(u_max);
    for (u64 u = 1; u <= u_max; ++u) {
        ArcVerdict v = decide_arc(f, u, n, budget);
        const Membership m = membership_of(v);
        prefix.entries.push_back({u, m, std::move(v)});
    }
    return prefix;
}

}  // namespace arcgraph
