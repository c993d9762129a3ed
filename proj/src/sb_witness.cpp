#include "arcgraph/arcs.hpp"
#include "arcgraph/sb_reachability.hpp"

#include <numeric>
#include <tuple>
#include <string>

namespace arcgraph {

namespace {

void check_sb_inputs(u64 b, u64 n, u64 u, const ExplorationBudget& budget) {
    if (b < 2) throw PreconditionError("base b must be at least 2");
    require_positive(n, "n");
    require_positive(u, "u");
    if (b > budget.input_cap || n > budget.input_cap || u > budget.input_cap) {
        throw CapExceeded("input exceeds the cap " + std::to_string(budget.input_cap));
    }
}

struct BaseSplit {
    u64 c = 0;  // max over primes p | b of v_p(n)
    u64 m = 1;  // n with all primes of b removed
};

BaseSplit split_by_base(u64 b, u64 n) {
    BaseSplit s{0, n};
    for (const auto& pf : factorize(b).factors) {
        u64 v = 0;
        while (s.m % pf.prime == 0) {
            s.m /= pf.prime;
            ++v;
        }
        s.c = std::max(s.c, v);
    }
    return s;
}

bool radical_divides_base(u64 b, u64 n) {
    for (const auto& pf : factorize(n).factors) {
        if (b % pf.prime != 0) return false;
    }
    return true;
}

// gcd(v, m) = 1, m >= 2
u64 modular_inverse(u64 v, u64 m) {
    __int128 r0 = v, r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    s0 %= static_cast<__int128>(m);
    if (s0 < 0) s0 += m;
    return static_cast<u64>(s0);
}

u64 checked_mul(u64 a, u64 b) {
    const u128 p = static_cast<u128>(a) * b;
    if (p > UINT64_MAX) throw CapExceeded("product overflows 64 bits");
    return static_cast<u64>(p);
}

// sum_{j=lo..hi} b^(j*step)
Natural geometric_block(u64 b, u64 step, u64 lo, u64 hi) {
    if (hi < lo) return 0;
    Natural ratio = natural_pow(b, step);
    Natural num = natural_pow(b, step * (hi - lo + 1)) - 1;
    Natural q;
    Natural den = ratio - 1;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q * natural_pow(b, step * lo);
}

}  // namespace

SbWitnessPair construct_sb_pair(u64 b, u64 n, const ExplorationBudget& budget) {
    if (b < 2) throw PreconditionError("construct_sb_pair: base b must be at least 2");
    if (n < 2) throw PreconditionError("construct_sb_pair: n must be at least 2 (n = 1 has Out = N)");
    if (const u64 d = std::gcd(b - 1, n); d != 1) {
        throw PreconditionError("construct_sb_pair: gcd(b-1, n) = gcd(" + std::to_string(b - 1) + ", " +
                                std::to_string(n) + ") = " + std::to_string(d) + ", must be 1");
    }
    const BaseSplit split = split_by_base(b, n);
    if (b == 2 && split.m == 1) {
        throw PreconditionError("construct_sb_pair: b = 2 and n is a power of 2 (Out = N, no pair needed)");
    }
    SbWitnessPair pair;
    pair.b = b;
    pair.n = n;
    pair.c = split.c;
    pair.m = split.m;
    pair.phi_m = totient(split.m);

    const u64 phi = pair.phi_m;
    const u64 digits_b = checked_mul(n + 1, phi) + split.c;
    if (digits_b > budget.max_witness_digits) {
        throw CapExceeded("pair for n = " + std::to_string(n) + " needs " + std::to_string(digits_b) + " digits");
    }
    const Natural shift = natural_pow(b, split.c);
    pair.A = shift * geometric_block(b, phi, 1, n);
    pair.B = shift * (geometric_block(b, phi, 1, n - 1) + to_natural(b / 2) * natural_pow(b, n * phi - 1) +
                      to_natural((b + 1) / 2) * natural_pow(b, (n + 1) * phi - 1));
    pair.a = digit_sum(pair.A, b);
    pair.ell = digit_sum(pair.B, b);
    return pair;
}

CoinRepresentation solve_coin_representation(u64 a, u64 ell, u64 u) {
    if (a == 0 || ell == 0) throw PreconditionError("coin values must be positive");
    if (std::gcd(a, ell) != 1) {
        throw PreconditionError("coin values " + std::to_string(a) + " and " + std::to_string(ell) +
                                " are not coprime");
    }
    if (a == 1) return {u, 0};
    // y = u * ell^{-1} (mod a) is the smallest y making u - ell*y divisible by a.
    const u64 inv = modular_inverse(ell % a, a);
    const u64 y = mulmod(u % a, inv, a);
    const u128 used = static_cast<u128>(ell) * y;
    if (used > u) {
        throw NotRepresentable(std::to_string(u) + " is not " + std::to_string(a) + "x + " + std::to_string(ell) +
                               "y with x, y >= 0");
    }
    return {static_cast<u64>((u - used) / a), y};
}

u64 sb_cofinite_threshold(u64 b, u64 n) {
    // a = n, l = n - 1 + b
    return checked_mul(n - 1, n + b - 2);
}

Natural sb_concatenation_witness(const SbWitnessPair& pair, u64 u, const ExplorationBudget& budget) {
    const auto [x, y] = solve_coin_representation(pair.a, pair.ell, u);
    const u64 len_a = digit_length(pair.A, pair.b);
    const u64 len_b = digit_length(pair.B, pair.b);
    const u128 total = static_cast<u128>(x) * len_a + static_cast<u128>(y) * len_b;
    if (total > budget.max_witness_digits) {
        throw CapExceeded("concatenation witness needs more than " + std::to_string(budget.max_witness_digits) +
                          " digits");
    }
    if (x == 0) return repeat_digits(pair.B, y, pair.b);
    Natural head = repeat_digits(pair.A, x, pair.b);
    if (y == 0) return head;
    return head * natural_pow(pair.b, len_b * y) + repeat_digits(pair.B, y, pair.b);
}

Natural sb_repetition_witness(u64 b, u64 n, u64 k) {
    require_positive(n, "n");
    require_positive(k, "k");
    return repeat_digits(to_natural(n), k, b);
}

std::optional<ResidueClassCert> sb_residue_refutation(u64 b, u64 n, u64 u) {
    const u64 d = std::gcd(b - 1, n);
    if (d > 1 && u % d != 0) return ResidueClassCert{d};
    return std::nullopt;
}

ArcVerdict decide_sb_exact(u64 b, u64 n, u64 u, u64 r, const ExplorationBudget& budget) {
    check_sb_inputs(b, n, u, budget);
    if (r >= n) throw PreconditionError("residue r must satisfy 0 <= r < n");
    try {
        SbReachability dp(b, n, u, budget.dp_state_cap);
        auto w = dp.witness(u, r, budget.max_witness_digits);
        if (w) return Proven{Witness{*w, std::nullopt}};
        const auto& op = dp.order();
        return Refuted{ModularExhaustionCert{b, n, u, r, op.preperiod, op.period}};
    } catch (const CapExceeded& e) {
        return Unknown{e.what()};
    }
}

ArcVerdict witness_sb(u64 b, u64 n, u64 u, const ExplorationBudget& budget) {
    check_sb_inputs(b, n, u, budget);
    const u64 max_digits = budget.max_witness_digits;
    if (n == 1 && u <= max_digits) return Proven{Witness{repunit(u, b), std::nullopt}};

    const u64 d = std::gcd(b - 1, n);
    if (d == 1 && radical_divides_base(b, n)) {
        u64 n0 = 0;
        for (const auto& pf : factorize(n).factors) n0 = std::max<u64>(n0, pf.exponent);
        if (u + n0 <= max_digits) return Proven{Witness{natural_pow(b, n0) * repunit(u, b), std::nullopt}};
    }

    const u64 s = digit_sum(n, b);
    if (u % s == 0) {
        const u64 k = u / s;
        if (static_cast<u128>(k) * digit_length(to_natural(n), b) <= max_digits) {
            return Proven{Witness{sb_repetition_witness(b, n, k), std::nullopt}};
        }
    }

    if (d == 1 && n >= 2 && !radical_divides_base(b, n) && u >= sb_cofinite_threshold(b, n)) {
        try {
            const auto pair = construct_sb_pair(b, n, budget);
            return Proven{Witness{sb_concatenation_witness(pair, u, budget), std::nullopt}};
        } catch (const CapExceeded&) {
            // fall through to the DP, which may find a shorter witness
        }
    }

    if (auto cert = sb_residue_refutation(b, n, u)) return Refuted{*cert};
    return decide_sb_exact(b, n, u, 0, budget);
}

}  // namespace arcgraph
