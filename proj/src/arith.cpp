#include "arcgraph/arith.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>

namespace arcgraph {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; n is odd, composite and has no factor below kTrialLimit.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 m = 128;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_large(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

// Writes exactly 2^level base-b digits of n (n < b^(2^level)) starting at out.
void expand_padded(const Natural& n, const std::vector<Natural>& powers, std::size_t level, u64 base,
                   u64* out) {
    const std::size_t width = std::size_t{1} << level;
    if (mpz_fits_ulong_p(n.get_mpz_t())) {
        u64 v = mpz_get_ui(n.get_mpz_t());
        for (std::size_t i = 0; i < width && v != 0; ++i) {
            out[i] = v % base;
            v /= base;
        }
        return;
    }
    Natural q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), powers[level - 1].get_mpz_t());
    expand_padded(r, powers, level - 1, base, out);
    expand_padded(q, powers, level - 1, base, out + width / 2);
}

std::vector<u64> raw_digits(const Natural& n, u64 base) {
    if (sgn(n) < 0) throw PreconditionError("negative value has no digit expansion");
    if (sgn(n) == 0) return {0};
    std::vector<u64> digits;
    if (mpz_fits_ulong_p(n.get_mpz_t())) {
        u64 v = mpz_get_ui(n.get_mpz_t());
        while (v != 0) {
            digits.push_back(v % base);
            v /= base;
        }
        return digits;
    }
    if (base <= 36) {
        std::string s = n.get_str(static_cast<int>(base));
        digits.reserve(s.size());
        for (auto it = s.rbegin(); it != s.rend(); ++it) {
            char c = *it;
            digits.push_back(c <= '9' ? static_cast<u64>(c - '0') : static_cast<u64>(c - 'a' + 10));
        }
        return digits;
    }
    std::vector<Natural> powers{to_natural(base)};
    while (powers.back() <= n) powers.push_back(powers.back() * powers.back());
    const std::size_t level = powers.size() - 1;
    digits.assign(std::size_t{1} << level, 0);
    expand_padded(n, powers, level, base, digits.data());
    while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
    return digits;
}

void require_base(u64 base) {
    if (base < 2) throw PreconditionError("base must be at least 2");
}

}  // namespace

// ---------------------------------------------------------------------------

u64 powmod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 result = 1;
    base %= mod;
    while (exp != 0) {
        if (exp & 1) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for all 64-bit n.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

u64 checked_pow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw CapExceeded("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

Factorization factorize(u64 n) {
    if (n == 0) throw PreconditionError("factorize: n must be positive");
    Factorization f;
    auto take = [&](u64 p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e != 0) f.factors.push_back({p, e});
    };
    take(2);
    take(3);
    for (u64 p = 5; p <= kTrialLimit && p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) {
        std::vector<u64> rest;
        factor_large(n, rest);
        std::sort(rest.begin(), rest.end());
        for (u64 p : rest) {
            if (!f.factors.empty() && f.factors.back().prime == p) {
                ++f.factors.back().exponent;
            } else {
                f.factors.push_back({p, 1});
            }
        }
    }
    return f;
}

MultiplicativeProfile multiplicative_profile(const Factorization& f) {
    MultiplicativeProfile p;
    for (const auto& [prime, e] : f.factors) {
        p.tau *= e + 1;
        p.omega += 1;
        p.big_omega += e;
        p.phi *= checked_pow(prime, e - 1) * (prime - 1);
        p.radical *= prime;
    }
    return p;
}

std::optional<PrimePower> is_prime_power(u64 n) {
    if (n == 0) throw PreconditionError("is_prime_power: n must be positive");
    if (n == 1) return PrimePower{std::nullopt, 0};
    auto f = factorize(n);
    if (f.factors.size() != 1) return std::nullopt;
    return PrimePower{f.factors[0].prime, f.factors[0].exponent};
}

u64 totient(u64 n) { return multiplicative_profile(factorize(n)).phi; }

std::vector<u64> generate_fresh_primes(std::size_t count, const std::set<u64>& avoid) {
    std::vector<u64> out;
    for (u64 p = 2; out.size() < count; ++p) {
        if (is_prime(p) && !avoid.contains(p)) out.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------

Natural Factorization::value() const {
    Natural v = 1;
    for (const auto& [p, e] : factors) {
        Natural pe;
        mpz_pow_ui(pe.get_mpz_t(), to_natural(p).get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

bool Factorization::is_valid() const {
    u64 prev = 0;
    for (const auto& [p, e] : factors) {
        if (p <= prev || e == 0 || !is_prime(p)) return false;
        prev = p;
    }
    return true;
}

std::string Factorization::to_string() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : factors) {
        if (!s.empty()) s += '*';
        s += std::to_string(p);
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

Factorization Factorization::parse(std::string_view text) {
    Factorization f;
    if (text == "1") return f;
    auto parse_u64 = [&](std::string_view part) {
        u64 v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
            throw PreconditionError("malformed factorization '" + std::string(text) + "'");
        }
        return v;
    };
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t star = text.find('*', pos);
        if (star == std::string_view::npos) star = text.size();
        std::string_view term = text.substr(pos, star - pos);
        std::size_t caret = term.find('^');
        u64 p = parse_u64(term.substr(0, caret));
        u64 e = caret == std::string_view::npos ? 1 : parse_u64(term.substr(caret + 1));
        f.factors.push_back({p, static_cast<unsigned>(e)});
        pos = star + 1;
    }
    if (!f.is_valid()) throw PreconditionError("invalid factorization '" + std::string(text) + "'");
    return f;
}

Natural DigitExpansion::value() const { return from_digits(digits, base); }

std::string DigitExpansion::to_string() const {
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (base <= 36) {
            s += static_cast<char>(*it < 10 ? '0' + *it : 'a' + (*it - 10));
        } else {
            if (!s.empty()) s += '.';
            s += std::to_string(*it);
        }
    }
    return s;
}

DigitExpansion digit_expansion(const Natural& n, u64 base) {
    require_base(base);
    return DigitExpansion{base, raw_digits(n, base)};
}

u64 digit_length(const Natural& n, u64 base) {
    require_base(base);
    if (sgn(n) == 0) return 1;
    if (base <= 62) {
        // exact for powers of two, otherwise at most one too large
        const u64 len = mpz_sizeinbase(n.get_mpz_t(), static_cast<int>(base));
        if ((base & (base - 1)) == 0 || len == 1) return len;
        return natural_pow(base, len - 1) > n ? len - 1 : len;
    }
    u64 len = static_cast<u64>(static_cast<double>(mpz_sizeinbase(n.get_mpz_t(), 2)) /
                               std::log2(static_cast<double>(base)));
    if (len == 0) len = 1;
    while (natural_pow(base, len) <= n) ++len;
    while (len > 1 && natural_pow(base, len - 1) > n) --len;
    return len;
}

u64 digit_sum(u64 n, u64 base) {
    require_base(base);
    u64 s = 0;
    while (n != 0) {
        s += n % base;
        n /= base;
    }
    return s;
}

u64 digit_sum(const Natural& n, u64 base) {
    require_base(base);
    if (fits_u64(n)) return digit_sum(to_u64(n), base);
    if (base == 2) return mpz_popcount(n.get_mpz_t());
    if ((base & (base - 1)) == 0) {
        // k-bit chunks straight from the binary representation
        const unsigned k = static_cast<unsigned>(std::countr_zero(base));
        const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        std::vector<unsigned char> bytes((bits + 7) / 8);
        std::size_t count = 0;
        mpz_export(bytes.data(), &count, -1, 1, 0, 0, n.get_mpz_t());
        u64 s = 0;
        for (std::size_t pos = 0; pos < bits; pos += k) {
            u64 chunk = 0;
            for (unsigned i = 0; i < k && pos + i < bits; ++i) {
                chunk |= static_cast<u64>((bytes[(pos + i) / 8] >> ((pos + i) % 8)) & 1U) << i;
            }
            s += chunk;
        }
        return s;
    }
    u64 s = 0;
    for (u64 d : raw_digits(n, base)) s += d;
    return s;
}

Natural power_digit_sum(const Natural& n, u64 base, unsigned e) {
    require_base(base);
    if (sgn(n) <= 0) throw PreconditionError("power_digit_sum: n must be positive");
    if (e == 0) throw PreconditionError("power_digit_sum: exponent must be at least 1");
    if (e == 1) return to_natural(digit_sum(n, base));
    Natural s = 0;
    for (u64 d : raw_digits(n, base)) {
        if (d == 0) continue;
        Natural term;
        mpz_pow_ui(term.get_mpz_t(), to_natural(d).get_mpz_t(), e);
        s += term;
    }
    return s;
}

Natural natural_pow(u64 base, u64 exp) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), to_natural(base).get_mpz_t(), exp);
    return r;
}

Natural from_digits(std::span<const u64> digits, u64 base) {
    require_base(base);
    for (u64 d : digits) {
        if (d >= base) throw PreconditionError("digit " + std::to_string(d) + " is not below the base");
    }
    if (digits.empty()) return 0;
    if (base <= 36) {
        // GMP's string conversion is subquadratic
        std::string s;
        s.reserve(digits.size());
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
            s += static_cast<char>(*it < 10 ? '0' + *it : 'a' + (*it - 10));
        }
        return Natural(s, static_cast<int>(base));
    }
    if (digits.size() <= 32) {
        Natural v = 0;
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
            mpz_mul_ui(v.get_mpz_t(), v.get_mpz_t(), base);
            mpz_add_ui(v.get_mpz_t(), v.get_mpz_t(), *it);
        }
        return v;
    }
    const std::size_t half = digits.size() / 2;
    Natural hi = from_digits(digits.subspan(half), base);
    Natural lo = from_digits(digits.first(half), base);
    return hi * natural_pow(base, half) + lo;
}

Natural concat_digits(std::span<const Natural> parts, u64 base) {
    require_base(base);
    if (parts.empty()) throw PreconditionError("concat_digits: no parts");
    Natural result = 0;
    for (const auto& part : parts) {
        if (sgn(part) <= 0) throw PreconditionError("concat_digits: every part must be positive");
        result = result * natural_pow(base, digit_length(part, base)) + part;
    }
    return result;
}

Natural repeat_digits(const Natural& part, u64 count, u64 base) {
    require_base(base);
    if (sgn(part) <= 0) throw PreconditionError("repeat_digits: part must be positive");
    if (count == 0) return 0;
    const u64 len = digit_length(part, base);
    Natural block = natural_pow(base, len);
    Natural num = natural_pow(base, len * count) - 1;
    Natural den = block - 1;
    Natural q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return part * q;
}

Natural repunit(u64 count, u64 base) {
    require_base(base);
    Natural num = natural_pow(base, count) - 1;
    Natural q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), base - 1);
    return q;
}

// ---------------------------------------------------------------------------

u64 multiplicative_order(u64 base, u64 n) {
    if (n == 0) throw PreconditionError("multiplicative_order: modulus must be positive");
    if (n == 1) return 1;
    if (std::gcd(base, n) != 1) throw PreconditionError("multiplicative_order: base not invertible");
    u64 order = totient(n);
    for (const auto& [q, e] : factorize(order).factors) {
        (void)e;
        while (order % q == 0 && powmod(base, order / q, n) == 1) order /= q;
    }
    return order;
}

OrderProfile order_profile(u64 base, u64 n) {
    require_base(base);
    if (n == 0) throw PreconditionError("order_profile: modulus must be positive");
    OrderProfile op{n, base, 0, 1};
    if (n == 1) return op;
    const auto bf = factorize(base);
    u64 coprime_part = n;
    for (const auto& [p, vb] : bf.factors) {
        u64 vn = 0;
        while (coprime_part % p == 0) {
            coprime_part /= p;
            ++vn;
        }
        op.preperiod = std::max<u64>(op.preperiod, (vn + vb - 1) / vb);
    }
    op.period = multiplicative_order(base % coprime_part, coprime_part);
    return op;
}

}  // namespace arcgraph
