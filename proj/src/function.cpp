#include "arcgraph/function.hpp"

namespace arcgraph {

FunctionId FunctionId::sum_digits(u64 base) {
    if (base < 2) throw PreconditionError("sum of digits needs base b >= 2");
    return FunctionId(FunctionKind::SumDigits, base, 1);
}

FunctionId FunctionId::happy(unsigned exponent, u64 base) {
    if (base < 2) throw PreconditionError("happy function needs base b >= 2");
    if (exponent < 1) throw PreconditionError("happy function needs exponent e >= 1");
    if (exponent == 1) return sum_digits(base);
    return FunctionId(FunctionKind::HappySum, base, exponent);
}

std::string FunctionId::name() const {
    switch (kind_) {
        case FunctionKind::SumDigits: return "sb";
        case FunctionKind::HappySum: return "happy";
        case FunctionKind::Tau: return "tau";
        case FunctionKind::Omega: return "omega";
        case FunctionKind::BigOmega: return "bigomega";
    }
    return "?";
}

std::string FunctionId::describe() const {
    switch (kind_) {
        case FunctionKind::SumDigits: return "s_" + std::to_string(base_);
        case FunctionKind::HappySum:
            return "S_{" + std::to_string(exponent_) + "," + std::to_string(base_) + "}";
        case FunctionKind::Tau: return "tau";
        case FunctionKind::Omega: return "omega";
        case FunctionKind::BigOmega: return "Omega";
    }
    return "?";
}

namespace {

u64 from_profile(FunctionKind kind, const MultiplicativeProfile& p) {
    switch (kind) {
        case FunctionKind::Tau: return p.tau;
        case FunctionKind::Omega: return p.omega;
        case FunctionKind::BigOmega: return p.big_omega;
        default: break;
    }
    throw PreconditionError("not a divisor-type function");
}

// tau of a supplied factorization may exceed 64 bits for exotic inputs.
Natural tau_of(const Factorization& f) {
    Natural t = 1;
    for (const auto& pf : f.factors) t *= to_natural(pf.exponent + 1ULL);
    return t;
}

}  // namespace

Natural eval(const FunctionId& f, const Natural& N, u64 factor_cap, const std::optional<Factorization>& known) {
    if (sgn(N) <= 0) throw PreconditionError("eval: N must be a positive integer");
    switch (f.kind()) {
        case FunctionKind::SumDigits: return to_natural(digit_sum(N, f.base()));
        case FunctionKind::HappySum: return power_digit_sum(N, f.base(), f.exponent());
        default: break;
    }
    if (known) {
        if (!known->is_valid() || known->value() != N) {
            throw PreconditionError("supplied factorization does not match N");
        }
        if (f.kind() == FunctionKind::Tau) return tau_of(*known);
        Natural count = 0;
        for (const auto& pf : known->factors) count += f.kind() == FunctionKind::Omega ? 1U : pf.exponent;
        return count;
    }
    if (!fits_u64(N) || to_u64(N) > factor_cap) {
        throw CapExceeded("N = " + to_decimal(N) + " exceeds the factorization cap " + std::to_string(factor_cap));
    }
    return to_natural(from_profile(f.kind(), multiplicative_profile(factorize(to_u64(N)))));
}

u64 eval_small(const FunctionId& f, u64 N) {
    if (N == 0) throw PreconditionError("eval: N must be a positive integer");
    switch (f.kind()) {
        case FunctionKind::SumDigits: return digit_sum(N, f.base());
        case FunctionKind::HappySum: {
            u64 s = 0;
            for (u64 v = N; v != 0; v /= f.base()) s += checked_pow(v % f.base(), f.exponent());
            return s;
        }
        default: return from_profile(f.kind(), multiplicative_profile(factorize(N)));
    }
}

}  // namespace arcgraph
