#pragma once
// natural.hpp - arbitrary-precision naturals and the library's error types.
//
// Inputs n, u, b are capped machine integers (std::uint64_t); witnesses N can
// be astronomically large and live in Natural (GMP-backed).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arcgraph {

using Natural = mpz_class;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Default cap on inputs that may need factoring (n, u, b, and N for tau/omega).
inline constexpr u64 kDefaultInputCap = 1'000'000'000'000ULL;

/// A caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured cap (factorization, DP states, witness size) was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// a*x + l*y = u has no non-negative solution.
class NotRepresentable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Out(g,n) is not cofinite (or not classified), so it has no Frobenius number.
class NoFrobeniusNumber : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Natural to_natural(u64 v) {
    Natural r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

inline bool fits_u64(const Natural& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline u64 to_u64(const Natural& v) {
    if (!fits_u64(v)) throw CapExceeded("value does not fit in 64 bits");
    u64 r = 0;
    mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, v.get_mpz_t());
    return r;
}

inline std::string to_decimal(const Natural& v) { return v.get_str(10); }

/// Parses an unbounded decimal string (digits only, no sign, no whitespace).
inline Natural parse_natural(std::string_view text) {
    if (text.empty()) throw PreconditionError("empty natural");
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw PreconditionError("malformed natural '" + std::string(text) + "'");
        }
    }
    return Natural(std::string(text), 10);
}

inline void require_positive(u64 v, const char* what) {
    if (v == 0) throw PreconditionError(std::string(what) + " must be a positive integer");
}

}  // namespace arcgraph
