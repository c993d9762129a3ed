#include "arcgraph/arcs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace arcgraph {

namespace {

void check_inputs(u64 n, u64 u, const ExplorationBudget& budget) {
    require_positive(n, "n");
    require_positive(u, "u");
    if (n > budget.input_cap || u > budget.input_cap) {
        throw CapExceeded("input exceeds the cap " + std::to_string(budget.input_cap));
    }
}

std::vector<u64> divisors_of(u64 v) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : factorize(v).factors) {
        const std::size_t existing = divs.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::set<u64> primes_of(const Factorization& f) {
    std::set<u64> s;
    for (const auto& pf : f.factors) s.insert(pf.prime);
    return s;
}

Factorization with_extra_primes(Factorization f, const std::vector<u64>& extra, unsigned exponent) {
    for (u64 q : extra) f.factors.push_back({q, exponent});
    std::sort(f.factors.begin(), f.factors.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
    return f;
}

long double log10_of(const Factorization& f) {
    long double s = 0;
    for (const auto& [p, e] : f.factors) s += static_cast<long double>(e) * std::log10(static_cast<long double>(p));
    return s;
}

// Materializes a witness from its factorization unless it is too long to write down.
ArcVerdict from_factorization(Factorization f, const ExplorationBudget& budget) {
    const long double digits = log10_of(f) + 1;
    if (digits > static_cast<long double>(budget.max_witness_digits)) {
        return Unknown{"witness has about " + std::to_string(static_cast<u64>(digits)) +
                       " decimal digits, cap is " + std::to_string(budget.max_witness_digits)};
    }
    Natural value = f.value();
    return Proven{Witness{std::move(value), std::move(f)}};
}

struct TauSearch {
    const std::vector<PrimeFactor>& slots;
    const std::vector<u64>& divisors;
    long double log_fresh;  // ln q for the fresh prime carrying the cofactor
    u64 node_cap;

    u64 nodes = 0;
    u64 leaves = 0;
    bool truncated = false;
    std::vector<u64> current{};
    std::optional<std::vector<u64>> best{};
    u64 best_cofactor = 1;
    long double best_score = 0;

    // smallest product of the minimum c_j over slots j >= i
    std::vector<long double> min_tail{};

    void run(std::size_t i, u64 remaining, long double score) {
        if (truncated) return;
        if (++nodes > node_cap) {
            truncated = true;
            return;
        }
        if (i == slots.size()) {
            ++leaves;
            const long double total =
                score + (remaining > 1 ? static_cast<long double>(remaining - 1) * log_fresh : 0.0L);
            if (!best || total < best_score || (total == best_score && current < *best)) {
                best = current;
                best_cofactor = remaining;
                best_score = total;
            }
            return;
        }
        const u64 min_c = slots[i].exponent + 1ULL;
        for (u64 c : divisors) {
            if (c > remaining) break;
            if (c < min_c || remaining % c != 0) continue;
            if (static_cast<long double>(remaining / c) < min_tail[i + 1]) continue;
            current.push_back(c);
            run(i + 1, remaining / c,
                score + static_cast<long double>(c - 1) * std::log(static_cast<long double>(slots[i].prime)));
            current.pop_back();
        }
    }
};

}  // namespace

u64 out_minimum(const FunctionId& f, u64 n) {
    require_positive(n, "n");
    const auto profile = multiplicative_profile(factorize(n));
    switch (f.kind()) {
        case FunctionKind::Tau: return profile.tau;
        case FunctionKind::Omega: return profile.omega;
        case FunctionKind::BigOmega: return profile.big_omega;
        default: break;
    }
    throw PreconditionError("out_minimum is defined for tau, omega and Omega only");
}

TauDecision decide_tau_exact(u64 n, u64 u, const ExplorationBudget& budget) {
    check_inputs(n, u, budget);
    const auto fn = factorize(n);
    const auto divisors = divisors_of(u);
    const u64 fresh = generate_fresh_primes(1, primes_of(fn)).front();

    TauSearch search{fn.factors, divisors, std::log(static_cast<long double>(fresh)), budget.search_node_cap};
    search.min_tail.assign(fn.factors.size() + 1, 1.0L);
    for (std::size_t i = fn.factors.size(); i-- > 0;) {
        search.min_tail[i] = search.min_tail[i + 1] * static_cast<long double>(fn.factors[i].exponent + 1ULL);
    }
    search.run(0, u, 0.0L);

    TauDecision out;
    out.tuples_searched = search.leaves;
    if (search.best) {
        out.member = true;
        out.slots = *search.best;
        out.cofactor = search.best_cofactor;
        return out;
    }
    if (search.truncated) {
        throw CapExceeded("tau tuple search exceeded " + std::to_string(budget.search_node_cap) + " nodes");
    }
    return out;
}

ArcVerdict witness_tau(u64 n, u64 u, const ExplorationBudget& budget) {
    check_inputs(n, u, budget);
    const auto fn = factorize(n);
    const u64 tau_n = multiplicative_profile(fn).tau;
    if (u < tau_n) return Refuted{BelowMinimumCert{tau_n}};

    if (u % tau_n == 0 && std::has_single_bit(u / tau_n)) {
        const auto ell = static_cast<std::size_t>(std::countr_zero(u / tau_n));
        return from_factorization(with_extra_primes(fn, generate_fresh_primes(ell, primes_of(fn)), 1), budget);
    }

    TauDecision decision;
    try {
        decision = decide_tau_exact(n, u, budget);
    } catch (const CapExceeded& e) {
        return Unknown{e.what()};
    }
    if (!decision.member) return Refuted{TauExhaustionCert{n, u, decision.tuples_searched}};

    Factorization f;
    for (std::size_t i = 0; i < fn.factors.size(); ++i) {
        f.factors.push_back({fn.factors[i].prime, static_cast<unsigned>(decision.slots[i] - 1)});
    }
    if (decision.cofactor > 1) {
        if (decision.cofactor - 1 > UINT32_MAX) return Unknown{"cofactor exponent too large"};
        const u64 q = generate_fresh_primes(1, primes_of(fn)).front();
        f = with_extra_primes(std::move(f), {q}, static_cast<unsigned>(decision.cofactor - 1));
    }
    return from_factorization(std::move(f), budget);
}

ArcVerdict decide_prime_count_arc(const FunctionId& f, u64 n, u64 u, const ExplorationBudget& budget) {
    if (f.kind() != FunctionKind::Omega && f.kind() != FunctionKind::BigOmega) {
        throw PreconditionError("decide_prime_count_arc needs omega or Omega");
    }
    check_inputs(n, u, budget);
    const auto fn = factorize(n);
    const u64 minimum = out_minimum(f, n);
    if (u < minimum) return Refuted{BelowMinimumCert{minimum}};
    const u64 ell = u - minimum;
    if (ell > budget.max_witness_digits) {
        return Unknown{"witness needs " + std::to_string(ell) + " fresh primes, cap is " +
                       std::to_string(budget.max_witness_digits) + " digits"};
    }
    return from_factorization(with_extra_primes(fn, generate_fresh_primes(ell, primes_of(fn)), 1), budget);
}

}  // namespace arcgraph
