#pragma once
// arith.hpp - exact integer primitives: factorization, digit expansions,
// multiplicative profiles and the preperiod/period of powers of b modulo n.

#include "arcgraph/natural.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace arcgraph {

struct PrimeFactor {
    u64 prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Sorted (prime, exponent) list; empty means 1.
struct Factorization {
    std::vector<PrimeFactor> factors;

    Natural value() const;
    /// Primes strictly increasing, each prime, exponents >= 1.
    bool is_valid() const;
    /// "2^3*3", "1" for the empty product.
    std::string to_string() const;
    static Factorization parse(std::string_view text);

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Least-significant digit first.
struct DigitExpansion {
    u64 base = 10;
    std::vector<u64> digits;

    Natural value() const;
    /// Most-significant first; 0-9a-z for base <= 36, dot-separated otherwise.
    std::string to_string() const;
};

struct MultiplicativeProfile {
    u64 tau = 1;
    u64 omega = 0;
    u64 big_omega = 0;
    u64 phi = 1;
    u64 radical = 1;
};

/// Minimal (preperiod, period) with base^(preperiod+period) = base^preperiod (mod modulus).
struct OrderProfile {
    u64 modulus = 1;
    u64 base = 2;
    u64 preperiod = 0;
    u64 period = 1;
};

struct PrimePower {
    std::optional<u64> prime;  // empty for the trivial case n = 1
    unsigned k = 0;
};

// -- machine-word helpers --------------------------------------------------

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 base, u64 exp, u64 mod);
bool is_prime(u64 n);
/// Exact integer power; throws CapExceeded on overflow.
u64 checked_pow(u64 base, unsigned exp);

// -- factorization and profiles ---------------------------------------------

Factorization factorize(u64 n);
MultiplicativeProfile multiplicative_profile(const Factorization& f);
std::optional<PrimePower> is_prime_power(u64 n);
u64 totient(u64 n);
/// The `count` smallest primes not in `avoid`, ascending.
std::vector<u64> generate_fresh_primes(std::size_t count, const std::set<u64>& avoid);

// -- digits ------------------------------------------------------------------

DigitExpansion digit_expansion(const Natural& n, u64 base);
/// Number of base-b digits of n (1 for n = 0).
u64 digit_length(const Natural& n, u64 base);
/// s_b(n); accepts 0 (returns 0) so it can serve as an internal helper.
u64 digit_sum(const Natural& n, u64 base);
u64 digit_sum(u64 n, u64 base);
/// S_{e,b}(n) = sum of e-th powers of the base-b digits; rejects n = 0.
Natural power_digit_sum(const Natural& n, u64 base, unsigned e);
/// Integer whose base-b digit string is the concatenation of the parts (first part most significant).
Natural concat_digits(std::span<const Natural> parts, u64 base);
/// `count` copies of `part` concatenated in base b.
Natural repeat_digits(const Natural& part, u64 count, u64 base);
/// (11...1)_b with `count` ones.
Natural repunit(u64 count, u64 base);
Natural natural_pow(u64 base, u64 exp);
/// Inverse of digit_expansion: digits least-significant first.
Natural from_digits(std::span<const u64> digits, u64 base);

// -- orders --------------------------------------------------------------------

OrderProfile order_profile(u64 base, u64 n);
/// Multiplicative order of base modulo n; requires gcd(base, n) = 1.
u64 multiplicative_order(u64 base, u64 n);

}  // namespace arcgraph
