#pragma once
// sb_reachability.hpp - exact decision of "some N = r (mod n) has s_b(N) = u".
//
// N with digit sum u is a sum of u powers of b where each exponent is used at
// most b-1 times. With (rho, t) the preperiod/period of b mod n, exponents
// e < rho are capped items (residue b^e, at most b-1 copies) and each residue
// b^(rho+j), j < t, is an unbounded item because infinitely many exponents
// share it. Layered reachability over (count, residue) answers every
// (u, r) with u <= max_count at once.

#include "arcgraph/arith.hpp"

#include <optional>
#include <vector>

namespace arcgraph {

/// Fixed-width bitset over residues 0..modulus-1 supporting cyclic shifts.
class ResidueSet {
public:
    ResidueSet() = default;
    explicit ResidueSet(u64 modulus) : modulus_(modulus), words_((modulus + 63) / 64, 0) {}

    bool test(u64 r) const { return (words_[r >> 6] >> (r & 63)) & 1U; }
    void set(u64 r) { words_[r >> 6] |= u64{1} << (r & 63); }
    bool empty() const;
    u64 modulus() const { return modulus_; }
    /// this |= { (x + shift) mod modulus : x in src }
    void or_rotated(const ResidueSet& src, u64 shift);
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (u64 bits = words_[w]; bits != 0; bits &= bits - 1) {
                fn(static_cast<u64>(w * 64 + static_cast<u64>(__builtin_ctzll(bits))));
            }
        }
    }

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    u64 modulus_ = 0;
    std::vector<u64> words_;
};

/// Digits of a reconstructed witness as (exponent, digit) pairs.
struct DigitPlacement {
    u64 exponent = 0;
    u64 digit = 0;
};

class SbReachability {
public:
    /// Throws CapExceeded when (max_count+1)*modulus exceeds state_cap.
    SbReachability(u64 base, u64 modulus, u64 max_count, u64 state_cap);

    bool reachable(u64 count, u64 residue) const;
    /// Deterministic witness: smallest capped count first, smallest periodic class
    /// when walking back, then the smallest free exponents within each class.
    /// nullopt when unreachable; CapExceeded when it would exceed max_digits.
    std::optional<Natural> witness(u64 count, u64 residue, u64 max_digits) const;
    std::optional<std::vector<DigitPlacement>> placement(u64 count, u64 residue) const;

    const OrderProfile& order() const { return order_; }
    u64 max_count() const { return max_count_; }

private:
    struct Split {
        u64 capped_count;
        u64 capped_residue;
    };
    std::optional<Split> find_split(u64 count, u64 residue) const;

    u64 base_;
    u64 modulus_;
    u64 max_count_;
    OrderProfile order_;
    std::vector<u64> capped_residues_;    // b^e mod n, e < preperiod
    std::vector<u64> periodic_residues_;  // b^(preperiod+j) mod n, j < period
    u64 capped_multiplicity_ = 0;
    // capped_[i][k]: residues reachable with k units from the first i capped items.
    std::vector<std::vector<ResidueSet>> capped_;
    // periodic_[c]: residues reachable with exactly c units from periodic items.
    std::vector<ResidueSet> periodic_;
};

}  // namespace arcgraph
