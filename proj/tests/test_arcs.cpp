#include "arcgraph/arcs.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace arcgraph;

namespace {

const FunctionId sb10 = FunctionId::sum_digits(10);

Witness bare(const Natural& n) { return Witness{n, std::nullopt}; }

Natural sum_of_powers(u64 b, std::initializer_list<u64> exps) {
    Natural s = 0;
    for (u64 e : exps) s += natural_pow(b, e);
    return s;
}

bool sound(const FunctionId& f, u64 n, u64 u, const ArcVerdict& v) {
    if (const auto* p = std::get_if<Proven>(&v)) return verify_arc_witness(f, n, u, p->witness);
    if (const auto* r = std::get_if<Refuted>(&v)) {
        if (const auto* rc = std::get_if<ResidueClassCert>(&r->certificate)) {
            if (!(rc->d > 1 && (f.base() - 1) % rc->d == 0 && n % rc->d == 0 && u % rc->d != 0)) return false;
        }
        return recheck_certificate(f, n, u, r->certificate);
    }
    return true;
}

}  // namespace

TEST_CASE("verify_arc_witness") {
    CHECK(verify_arc_witness(sb10, 3, 6, bare(33)));
    CHECK_FALSE(verify_arc_witness(sb10, 33, 3, bare(99)));
    CHECK(verify_arc_witness(FunctionId::tau(), 1, 3, bare(4)));
    CHECK(verify_arc_witness(sb10, 7, 6, bare(42)));
    CHECK_FALSE(verify_arc_witness(sb10, 4, 6, bare(42)));
    CHECK_FALSE(verify_arc_witness(sb10, 3, 6, bare(0)));
    // a wrong factorization is rejected, not trusted
    CHECK_FALSE(verify_arc_witness(FunctionId::tau(), 6, 8, Witness{24, Factorization::parse("2^2*3")}));
    CHECK(verify_arc_witness(FunctionId::tau(), 6, 8, Witness{24, Factorization::parse("2^3*3")}));
}

TEST_CASE("construct_sb_pair formulas") {
    const auto p = construct_sb_pair(2, 3);
    CHECK(p.A == 84);
    CHECK(p.B == 180);
    CHECK(p.a == 3);
    CHECK(p.ell == 4);
    CHECK(p.c == 0);
    CHECK(p.m == 3);
    CHECK(p.phi_m == 2);

    const auto q = construct_sb_pair(10, 7);
    Natural A = 0, B = 0;
    for (u64 j = 1; j <= 7; ++j) A += natural_pow(10, 6 * j);
    for (u64 j = 1; j <= 6; ++j) B += natural_pow(10, 6 * j);
    B += 5 * natural_pow(10, 41) + 5 * natural_pow(10, 47);
    CHECK(q.A == A);
    CHECK(q.B == B);
    CHECK(digit_sum(q.A, 10) == 7);
    CHECK(digit_sum(q.B, 10) == 16);
    CHECK(mpz_divisible_ui_p(q.A.get_mpz_t(), 7) != 0);
    CHECK(mpz_divisible_ui_p(q.B.get_mpz_t(), 7) != 0);

    CHECK_THROWS_AS(construct_sb_pair(3, 4), PreconditionError);
    CHECK_THROWS_AS(construct_sb_pair(10, 1), PreconditionError);
    CHECK_THROWS_AS(construct_sb_pair(2, 8), PreconditionError);
}

TEST_CASE("construct_sb_pair invariants") {
    for (u64 b = 2; b <= 8; ++b) {
        for (u64 n = 2; n <= 40; ++n) {
            if (oracle::gcd(b - 1, n) != 1) continue;
            bool power_of_two = (n & (n - 1)) == 0;
            if (b == 2 && power_of_two) continue;
            const auto p = construct_sb_pair(b, n);
            REQUIRE(mpz_divisible_ui_p(p.A.get_mpz_t(), n) != 0);
            REQUIRE(mpz_divisible_ui_p(p.B.get_mpz_t(), n) != 0);
            REQUIRE(digit_sum(p.A, b) == n);
            REQUIRE(digit_sum(p.B, b) == n - 1 + b);
            REQUIRE(p.a == n);
            REQUIRE(p.ell == n - 1 + b);
            REQUIRE(oracle::gcd(p.a, p.ell) == 1);
            REQUIRE(sb_cofinite_threshold(b, n) == (p.a - 1) * (p.ell - 1));
        }
    }
}

TEST_CASE("coin representation") {
    const auto r = solve_coin_representation(3, 4, 6);
    CHECK(r.x == 2);
    CHECK(r.y == 0);
    const auto one = solve_coin_representation(1, 9, 17);
    CHECK(one.x == 17);
    CHECK(one.y == 0);
    CHECK_THROWS_AS(solve_coin_representation(3, 4, 5), NotRepresentable);
    CHECK_THROWS_AS(solve_coin_representation(4, 6, 20), PreconditionError);
    // representable below the threshold still succeeds
    const auto low = solve_coin_representation(3, 4, 4);
    CHECK(low.x == 0);
    CHECK(low.y == 1);
}

TEST_CASE("coin representation identity and minimal y") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5000; ++i) {
        const u64 a = 1 + rng() % 200;
        const u64 ell = 1 + rng() % 200;
        if (oracle::gcd(a, ell) != 1) continue;
        const u64 u = (a - 1) * (ell - 1) + rng() % 1000;
        const auto r = solve_coin_representation(a, ell, u);
        REQUIRE(a * r.x + ell * r.y == u);
        for (u64 y = 0; y < r.y; ++y) REQUIRE((u - ell * y) % a != 0);
    }
}

TEST_CASE("witness_sb dispatch") {
    CHECK(witness_of(witness_sb(10, 3, 6)).value == 33);
    CHECK(witness_of(witness_sb(2, 4, 3)).value == 28);
    CHECK(witness_of(witness_sb(10, 1, 4)).value == 1111);
    const auto ex4 = witness_sb(10, 33, 3);
    REQUIRE(is_refuted(ex4));
    CHECK(std::holds_alternative<ModularExhaustionCert>(std::get<Refuted>(ex4).certificate));
    CHECK(std::holds_alternative<ResidueClassCert>(std::get<Refuted>(witness_sb(10, 3, 4)).certificate));
    // every dispatch branch yields verified witnesses
    for (u64 b : {2ULL, 3ULL, 10ULL}) {
        const auto f = FunctionId::sum_digits(b);
        for (u64 n = 1; n <= 20; ++n) {
            for (u64 u = 1; u <= 40; ++u) REQUIRE(sound(f, n, u, witness_sb(b, n, u)));
        }
    }
}

TEST_CASE("witness_sb concatenation branch") {
    const auto pair = construct_sb_pair(10, 7);
    const u64 t = sb_cofinite_threshold(10, 7);
    for (u64 u = t; u <= t + 20; ++u) {
        const auto w = sb_concatenation_witness(pair, u);
        REQUIRE(verify_arc_witness(sb10, 7, u, bare(w)));
        const auto v = witness_sb(10, 7, u);
        REQUIRE(verify_arc_witness(sb10, 7, u, witness_of(v)));
    }
}

TEST_CASE("decide_sb_exact examples") {
    CHECK(is_refuted(decide_sb_exact(10, 33, 3, 0)));
    const auto six = decide_sb_exact(10, 33, 6, 0);
    REQUIRE(is_proven(six));
    CHECK(verify_arc_witness(sb10, 33, 6, witness_of(six)));
    CHECK(verify_arc_witness(sb10, 33, 6, bare(231)));
    CHECK(oracle::first_sb_multiple(10, 33, 6, 100) == std::optional<u64>(33));
    CHECK(is_refuted(decide_sb_exact(10, 33, 1, 3)));
    CHECK_THROWS_AS(decide_sb_exact(10, 33, 1, 33), PreconditionError);
}

TEST_CASE("decide_sb_exact reconstruction is deterministic and uses distinct exponents") {
    // 10^0 + 10^1 + ... : the witness is a sum of powers of b with each exponent used at most b-1 times
    const auto a = decide_sb_exact(10, 33, 6, 0);
    const auto b = decide_sb_exact(10, 33, 6, 0);
    CHECK(witness_of(a).value == witness_of(b).value);
    const auto w = witness_of(decide_sb_exact(2, 7, 3, 0)).value;
    CHECK(w == sum_of_powers(2, {0, 1, 2}));
}

TEST_CASE("decide_sb_exact agrees with the multiple scan") {
    for (u64 b : {2ULL, 3ULL, 10ULL}) {
        const auto f = FunctionId::sum_digits(b);
        for (u64 n = 1; n <= 25; ++n) {
            const u64 d = oracle::gcd(b - 1, n);
            for (u64 u = 1; u <= 10; ++u) {
                const auto v = decide_sb_exact(b, n, u, 0);
                REQUIRE_FALSE(is_unknown(v));
                const auto found = oracle::first_sb_multiple(b, n, u, 10000);
                if (found) REQUIRE(is_proven(v));
                if (is_refuted(v)) REQUIRE_FALSE(found);
                if (is_proven(v)) {
                    REQUIRE(verify_arc_witness(f, n, u, witness_of(v)));
                    REQUIRE(u % d == 0);
                }
            }
        }
    }
}

TEST_CASE("decide_sb_exact with a residue agrees with a congruence scan") {
    for (u64 b : {2ULL, 3ULL, 10ULL}) {
        const auto f = FunctionId::sum_digits(b);
        for (u64 n = 2; n <= 15; ++n) {
            for (u64 r = 0; r < n; ++r) {
                for (u64 u = 1; u <= 8; ++u) {
                    const auto v = decide_sb_exact(b, n, u, r);
                    bool found = false;
                    for (u64 N = r == 0 ? n : r; N <= 200000 && !found; N += n) found = oracle::digit_sum(N, b) == u;
                    if (found) REQUIRE(is_proven(v));
                    if (is_refuted(v)) REQUIRE_FALSE(found);
                    if (is_proven(v)) REQUIRE(verify_congruence_witness(f, n, r, u, witness_of(v)));
                }
            }
        }
    }
}

TEST_CASE("decide_sb_exact budget yields Unknown") {
    ExplorationBudget tight;
    tight.dp_state_cap = 100;
    CHECK(is_unknown(decide_sb_exact(10, 33, 60, 0, tight)));
    // decide_arc falls back to a constructive witness when one exists
    const auto v = decide_arc(sb10, 33, 60, tight);
    REQUIRE(is_proven(v));
    CHECK(verify_arc_witness(sb10, 33, 60, witness_of(v)));
}

TEST_CASE("self-concatenation witnesses k*s_b(n)") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const u64 b = 2 + rng() % 15;
        const u64 n = 1 + rng() % 5000;
        for (u64 k = 1; k <= 10; ++k) {
            const Natural w = sb_repetition_witness(b, n, k);
            REQUIRE(verify_arc_witness(FunctionId::sum_digits(b), n, k * digit_sum(n, b), bare(w)));
        }
    }
}

TEST_CASE("decide_tau_exact") {
    CHECK_FALSE(decide_tau_exact(6, 5).member);
    CHECK(decide_tau_exact(6, 4).member);
    const auto d = decide_tau_exact(6, 8);
    CHECK(d.member);
    // the decider picks the tuple with the smallest N: 2^3 * 3 = 24
    CHECK(d.slots == std::vector<u64>{4, 2});
    CHECK(d.cofactor == 1);
    // witness_tau prefers the doubling construction: 8 = 2 * tau(6) gives 6 * 5
    CHECK(witness_of(witness_tau(6, 8)).value == 30);
    CHECK(decide_tau_exact(1, 1).member);
    CHECK_FALSE(decide_tau_exact(2, 1).member);
}

TEST_CASE("witness_tau") {
    CHECK(witness_of(witness_tau(1, 3)).value == 4);
    const auto w = witness_tau(6, 16);
    CHECK(witness_of(w).value == 210);
    REQUIRE(witness_of(w).factorization);
    CHECK(witness_of(w).factorization->to_string() == "2*3*5*7");
    const auto r = witness_tau(6, 5);
    REQUIRE(is_refuted(r));
    CHECK(certificate_name(std::get<Refuted>(r).certificate) == "TauFactorizationExhaustion");
    const auto below = witness_tau(12, 5);
    REQUIRE(is_refuted(below));
    CHECK(std::get<BelowMinimumCert>(std::get<Refuted>(below).certificate).minimum == 6);
}

TEST_CASE("witness_tau builds large witnesses from factorizations") {
    // 2^20 * tau(720720): N has 20 fresh primes beyond those of n
    const u64 n = 720720;
    const u64 u = (u64{1} << 20) * 240;
    const auto v = witness_tau(n, u);
    REQUIRE(is_proven(v));
    CHECK(verify_arc_witness(FunctionId::tau(), n, u, witness_of(v)));
    // a cofactor prime with a big exponent
    const auto big = witness_tau(2, 2 * 1009);
    REQUIRE(is_proven(big));
    CHECK(verify_arc_witness(FunctionId::tau(), 2, 2 * 1009, witness_of(big)));
}

TEST_CASE("decide_tau_exact agrees with the divisor sieve") {
    const u64 k_max = 20000;
    const auto tau = oracle::tau_sieve(40 * k_max);
    for (u64 n = 1; n <= 40; ++n) {
        for (u64 u = 1; u <= 24; ++u) {
            const bool member = decide_tau_exact(n, u).member;
            const auto found = oracle::first_multiple(tau, n, u, k_max);
            if (found) REQUIRE(member);
            if (!member) REQUIRE_FALSE(found);
            const auto v = witness_tau(n, u);
            REQUIRE(is_proven(v) == member);
            REQUIRE(sound(FunctionId::tau(), n, u, v));
        }
    }
}

TEST_CASE("prime count arcs") {
    const auto omega = FunctionId::omega();
    const auto big = FunctionId::big_omega();
    const auto r = decide_prime_count_arc(omega, 12, 1);
    REQUIRE(is_refuted(r));
    CHECK(std::get<BelowMinimumCert>(std::get<Refuted>(r).certificate).minimum == 2);
    CHECK(witness_of(decide_prime_count_arc(omega, 12, 2)).value == 12);
    CHECK(witness_of(decide_prime_count_arc(big, 12, 5)).value == 420);
    CHECK_THROWS_AS(decide_prime_count_arc(FunctionId::tau(), 12, 5), PreconditionError);
}

TEST_CASE("prime count arcs agree with sieves") {
    const u64 k_max = 100000;
    const auto pc = oracle::prime_count_sieve(50 * k_max);
    for (u64 n = 1; n <= 50; ++n) {
        for (u64 u = 1; u <= 6; ++u) {
            const auto vo = decide_prime_count_arc(FunctionId::omega(), n, u);
            const auto vb = decide_prime_count_arc(FunctionId::big_omega(), n, u);
            REQUIRE(is_proven(vo) == oracle::first_multiple(pc.omega, n, u, k_max).has_value());
            REQUIRE(is_proven(vb) == oracle::first_multiple(pc.big_omega, n, u, k_max).has_value());
            REQUIRE(sound(FunctionId::omega(), n, u, vo));
            REQUIRE(sound(FunctionId::big_omega(), n, u, vb));
        }
    }
}

TEST_CASE("oracle_search") {
    CHECK(oracle_search(sb10, 3, 6, 20) == std::optional<Natural>(6));
    CHECK(oracle_search(sb10, 3, 12, 20) == std::optional<Natural>(39));
    CHECK(oracle_search(sb10, 3, 6, 1) == std::nullopt);
    CHECK_FALSE(oracle_search(sb10, 33, 3, 10000));
    CHECK(oracle_search(FunctionId::tau(), 6, 8, 100) == std::optional<Natural>(24));
    CHECK_THROWS_AS(oracle_search(FunctionId::tau(), 1000000, 8, 10000000), CapExceeded);
}

TEST_CASE("decide_arc") {
    CHECK(is_refuted(decide_arc(sb10, 33, 3)));
    const auto r = decide_arc(FunctionId::omega(), 12, 1);
    REQUIRE(is_refuted(r));
    CHECK(std::holds_alternative<BelowMinimumCert>(std::get<Refuted>(r).certificate));
    ExplorationBudget ten;
    ten.oracle_k_max = 10;
    CHECK(witness_of(decide_arc(FunctionId::happy(2, 10), 5, 1, ten)).value == 10);
    CHECK(is_unknown(decide_arc(FunctionId::happy(2, 10), 3, 2, ten)));
    CHECK_THROWS_AS(decide_arc(sb10, 0, 3), PreconditionError);
    CHECK_THROWS_AS(decide_arc(sb10, 3, 0), PreconditionError);
}

TEST_CASE("decide_arc soundness sweep") {
    const std::vector<FunctionId> fs{FunctionId::sum_digits(2), FunctionId::sum_digits(7), sb10,
                                     FunctionId::tau(),         FunctionId::omega(),       FunctionId::big_omega()};
    for (const auto& f : fs) {
        for (u64 n = 1; n <= 30; ++n) {
            for (u64 u = 1; u <= 30; ++u) {
                const auto v = decide_arc(f, n, u);
                REQUIRE_FALSE(is_unknown(v));
                REQUIRE(sound(f, n, u, v));
            }
        }
    }
}

TEST_CASE("happy-function witnesses verify") {
    const auto f = FunctionId::happy(2, 10);
    for (u64 n = 1; n <= 20; ++n) {
        for (u64 u = 1; u <= 20; ++u) {
            const auto v = decide_arc(f, n, u);
            if (is_proven(v)) REQUIRE(verify_arc_witness(f, n, u, witness_of(v)));
            REQUIRE_FALSE(is_refuted(v));
        }
    }
}

TEST_CASE("tampered certificates fail the recheck") {
    CHECK_FALSE(recheck_certificate(sb10, 33, 6, ModularExhaustionCert{10, 33, 6, 0, 0, 2}));
    CHECK_FALSE(recheck_certificate(sb10, 33, 3, ModularExhaustionCert{10, 33, 3, 0, 1, 2}));
    CHECK(recheck_certificate(sb10, 33, 3, ModularExhaustionCert{10, 33, 3, 0, 0, 2}));
    CHECK_FALSE(recheck_certificate(sb10, 3, 6, ResidueClassCert{3}));
    CHECK_FALSE(recheck_certificate(FunctionId::tau(), 6, 8, TauExhaustionCert{6, 8, 0}));
    CHECK_FALSE(recheck_certificate(FunctionId::omega(), 12, 2, BelowMinimumCert{2}));
    CHECK(recheck_certificate(sb10, 33, 3, BoundedExhaustionCert{100}));
    CHECK_FALSE(recheck_certificate(sb10, 3, 6, BoundedExhaustionCert{100}));
}

TEST_CASE("large inputs stay exact or honest") {
    // u well past the DP cap: the repetition witness applies since s_10(7) = 7 divides u
    const auto v = decide_arc(sb10, 7, 7 * 200000);
    REQUIRE(is_proven(v));
    CHECK(verify_arc_witness(sb10, 7, 7 * 200000, witness_of(v)));
    // no constructive path within the witness budget: Unknown, never a guess
    CHECK(is_unknown(decide_arc(sb10, 7, 10000001)));
    CHECK_THROWS_AS(decide_arc(sb10, 7, kDefaultInputCap + 1), CapExceeded);
}

TEST_CASE("decide_sb_exact matches the exact digit-append search for every residue") {
    for (u64 b = 2; b <= 12; ++b) {
        for (u64 n = 1; n <= 20; ++n) {
            for (u64 r = 0; r < n; ++r) {
                const auto member = oracle::sb_members(b, n, 25, r);
                for (u64 u = 1; u <= 25; ++u) {
                    const auto v = decide_sb_exact(b, n, u, r);
                    REQUIRE_FALSE(is_unknown(v));
                    REQUIRE(is_proven(v) == member[u]);
                }
            }
        }
    }
}
