#include "arcgraph/sb_reachability.hpp"

#include <algorithm>
#include <string>

namespace arcgraph {

bool ResidueSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](u64 w) { return w == 0; });
}

void ResidueSet::or_rotated(const ResidueSet& src, u64 shift) {
    shift %= modulus_;
    const std::size_t W = words_.size();
    if (W == 1) {
        const u64 v = src.words_[0];
        u64 r = v << shift;
        if (shift != 0) r |= v >> (modulus_ - shift);
        words_[0] |= modulus_ == 64 ? r : r & ((u64{1} << modulus_) - 1);
        return;
    }
    {
        const std::size_t ws = shift / 64;
        const unsigned bs = shift % 64;
        for (std::size_t i = W; i-- > ws;) {
            u64 v = src.words_[i - ws] << bs;
            if (bs != 0 && i > ws) v |= src.words_[i - ws - 1] >> (64 - bs);
            words_[i] |= v;
        }
    }
    if (shift != 0) {
        const u64 back = modulus_ - shift;
        const std::size_t ws = back / 64;
        const unsigned bs = back % 64;
        for (std::size_t i = 0; i + ws < W; ++i) {
            u64 v = src.words_[i + ws] >> bs;
            if (bs != 0 && i + ws + 1 < W) v |= src.words_[i + ws + 1] << (64 - bs);
            words_[i] |= v;
        }
    }
    if (const unsigned tail = modulus_ % 64; tail != 0) words_[W - 1] &= (u64{1} << tail) - 1;
}

SbReachability::SbReachability(u64 base, u64 modulus, u64 max_count, u64 state_cap)
    : base_(base), modulus_(modulus), max_count_(max_count) {
    if (base < 2) throw PreconditionError("base must be at least 2");
    if (modulus == 0) throw PreconditionError("modulus must be positive");
    if (static_cast<u128>(max_count + 1) * modulus > state_cap) {
        throw CapExceeded("digit-sum DP needs " + std::to_string(max_count + 1) + "*" + std::to_string(modulus) +
                          " states, cap is " + std::to_string(state_cap));
    }
    order_ = order_profile(base, modulus);

    for (u64 e = 0; e < order_.preperiod; ++e) capped_residues_.push_back(powmod(base, e, modulus));
    u64 w = powmod(base, order_.preperiod, modulus);
    for (u64 j = 0; j < order_.period; ++j) {
        periodic_residues_.push_back(w);
        w = mulmod(w, base % modulus, modulus);
    }

    capped_multiplicity_ = std::min(base - 1, max_count);
    const u128 capped_units = static_cast<u128>(order_.preperiod) * (base - 1);
    const u64 capped_max = capped_units < max_count ? static_cast<u64>(capped_units) : max_count;

    std::vector<ResidueSet> layer(capped_max + 1, ResidueSet(modulus));
    layer[0].set(0);
    capped_.push_back(layer);
    for (u64 v : capped_residues_) {
        std::vector<ResidueSet> next(capped_max + 1, ResidueSet(modulus));
        for (u64 k = 0; k <= capped_max; ++k) {
            for (u64 j = 0; j <= std::min(capped_multiplicity_, k); ++j) {
                next[k].or_rotated(capped_.back()[k - j], mulmod(j % modulus, v, modulus));
            }
        }
        capped_.push_back(std::move(next));
    }

    periodic_.assign(max_count + 1, ResidueSet(modulus));
    periodic_[0].set(0);
    for (u64 c = 1; c <= max_count; ++c) {
        for (u64 r : periodic_residues_) periodic_[c].or_rotated(periodic_[c - 1], r);
    }
}

std::optional<SbReachability::Split> SbReachability::find_split(u64 count, u64 residue) const {
    if (count > max_count_) throw PreconditionError("count exceeds the DP horizon");
    if (residue >= modulus_) throw PreconditionError("residue must be below the modulus");
    const auto& capped = capped_.back();
    const u64 limit = std::min<u64>(count, capped.size() - 1);
    for (u64 k = 0; k <= limit; ++k) {
        std::optional<Split> found;
        capped[k].for_each([&](u64 x) {
            if (found) return;
            const u64 need = (residue + modulus_ - x) % modulus_;
            if (periodic_[count - k].test(need)) found = Split{k, x};
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool SbReachability::reachable(u64 count, u64 residue) const { return find_split(count, residue).has_value(); }

std::optional<std::vector<DigitPlacement>> SbReachability::placement(u64 count, u64 residue) const {
    auto split = find_split(count, residue);
    if (!split) return std::nullopt;
    std::vector<DigitPlacement> out;

    u64 k = split->capped_count;
    u64 x = split->capped_residue;
    for (std::size_t i = capped_residues_.size(); i-- > 0;) {
        const u64 v = capped_residues_[i];
        for (u64 j = 0; j <= std::min(capped_multiplicity_, k); ++j) {
            const u64 prev = (x + modulus_ - mulmod(j % modulus_, v, modulus_)) % modulus_;
            if (capped_[i][k - j].test(prev)) {
                if (j != 0) out.push_back({i, j});
                k -= j;
                x = prev;
                break;
            }
        }
    }

    std::vector<u64> class_counts(periodic_residues_.size(), 0);
    u64 c = count - split->capped_count;
    u64 y = (residue + modulus_ - split->capped_residue) % modulus_;
    while (c > 0) {
        for (std::size_t j = 0; j < periodic_residues_.size(); ++j) {
            const u64 prev = (y + modulus_ - periodic_residues_[j]) % modulus_;
            if (periodic_[c - 1].test(prev)) {
                ++class_counts[j];
                y = prev;
                break;
            }
        }
        --c;
    }
    for (std::size_t j = 0; j < class_counts.size(); ++j) {
        u64 remaining = class_counts[j];
        for (u64 e = order_.preperiod + j; remaining > 0; e += order_.period) {
            const u64 digit = std::min(base_ - 1, remaining);
            out.push_back({e, digit});
            remaining -= digit;
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
    return out;
}

std::optional<Natural> SbReachability::witness(u64 count, u64 residue, u64 max_digits) const {
    auto places = placement(count, residue);
    if (!places) return std::nullopt;
    const u64 length = places->empty() ? 1 : places->back().exponent + 1;
    if (length > max_digits) {
        throw CapExceeded("witness needs " + std::to_string(length) + " digits, cap is " + std::to_string(max_digits));
    }
    std::vector<u64> digits(length, 0);
    for (const auto& p : *places) digits[p.exponent] = p.digit;
    return from_digits(digits, base_);
}

}  // namespace arcgraph
