#pragma once
// function.hpp - the arithmetic functions g whose arcs are studied.

#include "arcgraph/arith.hpp"

#include <optional>
#include <string>

namespace arcgraph {

enum class FunctionKind { SumDigits, HappySum, Tau, Omega, BigOmega };

/// g in {s_b, S_{e,b}, tau, omega, Omega}. HappySum with e = 1 is stored as SumDigits.
class FunctionId {
public:
    static FunctionId sum_digits(u64 base);
    static FunctionId happy(unsigned exponent, u64 base);
    static FunctionId tau() { return FunctionId(FunctionKind::Tau, 0, 1); }
    static FunctionId omega() { return FunctionId(FunctionKind::Omega, 0, 1); }
    static FunctionId big_omega() { return FunctionId(FunctionKind::BigOmega, 0, 1); }

    FunctionKind kind() const { return kind_; }
    /// Digit base; 0 for the divisor-type functions.
    u64 base() const { return base_; }
    unsigned exponent() const { return exponent_; }
    bool is_digit_function() const {
        return kind_ == FunctionKind::SumDigits || kind_ == FunctionKind::HappySum;
    }
    bool needs_factorization() const { return !is_digit_function(); }

    /// CLI name: sb, happy, tau, omega, bigomega.
    std::string name() const;
    /// Human form such as "s_10", "S_{2,10}", "tau".
    std::string describe() const;

    friend bool operator==(const FunctionId&, const FunctionId&) = default;

private:
    FunctionId(FunctionKind k, u64 b, unsigned e) : kind_(k), base_(b), exponent_(e) {}

    FunctionKind kind_;
    u64 base_;
    unsigned exponent_;
};

/// g(N). Divisor-type functions factor N, which must then be at most `factor_cap`
/// unless `known` supplies a factorization of N (it is checked, not trusted).
Natural eval(const FunctionId& f, const Natural& N, u64 factor_cap = kDefaultInputCap,
             const std::optional<Factorization>& known = std::nullopt);

/// Machine-word fast path used by scans; g(N) for N >= 1.
u64 eval_small(const FunctionId& f, u64 N);

}  // namespace arcgraph
