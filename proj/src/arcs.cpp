#include "arcgraph/arcs.hpp"

#include <numeric>
#include <string>

namespace arcgraph {

namespace {

u64 scan_limit(const FunctionId& f, u64 n, u64 k_max, const ExplorationBudget& budget) {
    const u128 limit = static_cast<u128>(n) * k_max;
    if (limit > UINT64_MAX) throw CapExceeded("k_max * n overflows 64 bits");
    if (f.needs_factorization() && limit > budget.input_cap) {
        throw CapExceeded("k_max * n = " + std::to_string(static_cast<u64>(limit)) + " exceeds the factorization cap " +
                          std::to_string(budget.input_cap));
    }
    return static_cast<u64>(limit);
}

}  // namespace

bool verify_arc_witness(const FunctionId& f, u64 n, u64 u, const Witness& w, const ExplorationBudget& budget) {
    return verify_congruence_witness(f, n, 0, u, w, budget);
}

bool verify_congruence_witness(const FunctionId& f, u64 n, u64 r, u64 u, const Witness& w,
                               const ExplorationBudget& budget) {
    require_positive(n, "n");
    require_positive(u, "u");
    if (sgn(w.value) <= 0) return false;
    if (mpz_fdiv_ui(w.value.get_mpz_t(), n) != r % n) return false;
    if (w.factorization && (!w.factorization->is_valid() || w.factorization->value() != w.value)) return false;
    return eval(f, w.value, budget.input_cap, w.factorization) == to_natural(u);
}

std::optional<Natural> oracle_search(const FunctionId& f, u64 n, u64 u, u64 k_max, const ExplorationBudget& budget) {
    require_positive(n, "n");
    require_positive(u, "u");
    require_positive(k_max, "k_max");
    const u64 limit = scan_limit(f, n, k_max, budget);
    for (u64 N = n; N <= limit; N += n) {
        if (eval_small(f, N) == u) return to_natural(N);
        if (N > limit - n) break;
    }
    return std::nullopt;
}

ArcVerdict decide_arc(const FunctionId& f, u64 n, u64 u, const ExplorationBudget& budget) {
    require_positive(n, "n");
    require_positive(u, "u");
    if (n > budget.input_cap || u > budget.input_cap) {
        throw CapExceeded("input exceeds the cap " + std::to_string(budget.input_cap));
    }
    switch (f.kind()) {
        case FunctionKind::SumDigits: {
            if (auto cert = sb_residue_refutation(f.base(), n, u)) return Refuted{*cert};
            ArcVerdict v = decide_sb_exact(f.base(), n, u, 0, budget);
            if (is_unknown(v)) return witness_sb(f.base(), n, u, budget);
            return v;
        }
        case FunctionKind::HappySum: {
            u64 k_max = budget.oracle_k_max;
            if (static_cast<u128>(k_max) * n > UINT64_MAX) k_max = UINT64_MAX / n;
            if (auto N = oracle_search(f, n, u, k_max, budget)) return Proven{Witness{*N, std::nullopt}};
            return Unknown{"no multiple up to " + std::to_string(k_max) + "*n has S = u"};
        }
        case FunctionKind::Tau: return witness_tau(n, u, budget);
        case FunctionKind::Omega:
        case FunctionKind::BigOmega: return decide_prime_count_arc(f, n, u, budget);
    }
    return Unknown{"unsupported function"};
}

bool recheck_certificate(const FunctionId& f, u64 n, u64 u, const RefutationCertificate& cert,
                         const ExplorationBudget& budget) {
    if (const auto* rc = std::get_if<ResidueClassCert>(&cert)) {
        return f.kind() == FunctionKind::SumDigits && rc->d > 1 && (f.base() - 1) % rc->d == 0 && n % rc->d == 0 &&
               u % rc->d != 0;
    }
    if (const auto* bm = std::get_if<BelowMinimumCert>(&cert)) {
        return f.needs_factorization() && out_minimum(f, n) == bm->minimum && u < bm->minimum;
    }
    if (const auto* me = std::get_if<ModularExhaustionCert>(&cert)) {
        if (f.kind() != FunctionKind::SumDigits || me->base != f.base() || me->modulus != n || me->target != u) {
            return false;
        }
        const auto op = order_profile(me->base, me->modulus);
        if (op.preperiod != me->preperiod || op.period != me->period) return false;
        return is_refuted(decide_sb_exact(me->base, me->modulus, me->target, me->residue, budget));
    }
    if (const auto* te = std::get_if<TauExhaustionCert>(&cert)) {
        return f.kind() == FunctionKind::Tau && te->n == n && te->u == u && !decide_tau_exact(n, u, budget).member;
    }
    if (const auto* be = std::get_if<BoundedExhaustionCert>(&cert)) {
        return !oracle_search(f, n, u, be->k, budget).has_value();
    }
    return false;
}

}  // namespace arcgraph
