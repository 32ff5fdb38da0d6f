#pragma once

#include "padicrep/fp.hpp"

#include <vector>

namespace padicrep {

// Minimal unsigned big integer: just enough for exact binomial coefficients
// and their reductions. Limbs are base 2^32, little endian.
class BigUint {
  public:
    BigUint() = default;
    explicit BigUint(u64 v) {
        if (v) {
            limbs_.push_back(static_cast<u32>(v));
            if (v >> 32) limbs_.push_back(static_cast<u32>(v >> 32));
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    void add(const BigUint& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        u64 carry = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            u64 s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<u32>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<u32>(carry));
    }

    void mul_small(u64 m) {
        if (m == 0 || is_zero()) { limbs_.clear(); return; }
        u64 lo = static_cast<u32>(m), hi = m >> 32;
        if (hi == 0) {
            u64 carry = 0;
            for (auto& l : limbs_) {
                u64 s = (u64)l * lo + carry;
                l = static_cast<u32>(s);
                carry = s >> 32;
            }
            while (carry) { limbs_.push_back(static_cast<u32>(carry)); carry >>= 32; }
        } else {
            BigUint high = *this;
            u64 carry = 0;
            for (auto& l : limbs_) {
                u64 s = (u64)l * lo + carry;
                l = static_cast<u32>(s);
                carry = s >> 32;
            }
            while (carry) { limbs_.push_back(static_cast<u32>(carry)); carry >>= 32; }
            high.mul_small(hi);
            high.shift_limbs(1);
            add(high);
        }
    }

    // Exact division by a small divisor; throws if a remainder is left.
    void div_small_exact(u64 d) {
        if (d == 0) throw domain_error("BigUint: division by zero");
        u64 rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            u64 cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<u32>(cur / d);
            rem = cur % d;
        }
        if (rem) throw internal_error("BigUint: division was not exact");
        trim();
    }

    u64 mod_small(u64 m) const {
        if (m == 0) throw domain_error("BigUint: mod zero");
        u64 rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;)
            rem = (((u128)rem << 32) | limbs_[i]) % m;
        return rem;
    }

    friend bool operator==(const BigUint&, const BigUint&) = default;

  private:
    void shift_limbs(size_t n) {
        if (is_zero()) return;
        limbs_.insert(limbs_.begin(), n, 0);
    }
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<u32> limbs_;
};

// Exact C(r, n) as a big integer via the prefix-product identity
// C(r, n) = prod_{i=1..n} (r-n+i)/i, each prefix being integral.
inline BigUint big_binomial(u64 r, u64 n) {
    if (n > r) return BigUint(0);
    if (n > r - n) n = r - n;
    BigUint acc(1);
    for (u64 i = 1; i <= n; ++i) {
        acc.mul_small(r - n + i);
        acc.div_small_exact(i);
    }
    return acc;
}

} // namespace padicrep
