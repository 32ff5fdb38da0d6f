#include "padicrep/labels.hpp"

#include "padicrep/qstruct.hpp"

#include <sstream>

namespace padicrep {

u64 normalize_ind_exponent(i64 k, u32 p) {
    const i64 m = static_cast<i64>(p) * p - 1;
    i64 kk = ((k % m) + m) % m;
    i64 other = (kk * p) % m;
    u64 a = static_cast<u64>(kk), b = static_cast<u64>(other);
    return std::min(a, b);
}

u64 label_to_ind_exponent(u32 n, u32 m, u32 p) {
    return normalize_ind_exponent(static_cast<i64>(n) + 1 + static_cast<i64>(m) * (p + 1), p);
}

TheoremLabel TheoremLabel::ind(i64 exponent, u32 p) {
    TheoremLabel l;
    l.kind = Kind::irreducible_ind;
    l.exponent_class = normalize_ind_exponent(exponent, p);
    std::ostringstream os;
    os << "ind(w2^" << l.exponent_class << ")";
    l.text = os.str();
    return l;
}

TheoremLabel TheoremLabel::reducible(u32 p) {
    TheoremLabel l;
    l.kind = Kind::reducible_pair;
    (void)p;
    // the two roots of T^2 + 1, kept symbolic
    l.text = "u(sqrt(-1))w + u(-sqrt(-1))w";
    return l;
}

TheoremLabel TheoremLabel::open_case(const std::string& why) {
    TheoremLabel l;
    l.kind = Kind::out_of_scope;
    l.text = "out-of-scope: " + why;
    return l;
}

TheoremLabel predicted_reduction(u32 p, u64 r, const SlopeParam& slope) {
    require_prime_ge5(p);
    slope.require_open_interval();
    if (r < 3 * static_cast<u64>(p) + 2)
        throw domain_error("predicted_reduction: need r >= 3p+2");
    if (slope.is_half_five() && !slope.ap2_minus_p5_has_val5())
        return TheoremLabel::open_case("v(a_p)=5/2 with v(a_p^2-p^5) != 5");

    const u32 a = residue_window(r, p, 3); // a in [3, p+1]
    const u64 rp = r % p;
    const u64 p2 = static_cast<u64>(p) * p;
    const u64 p3 = p2 * p;
    auto vdiff = [&](u64 target) { // v_p(r - target mod stabilised), assumes r = target mod p
        u64 v = 0;
        i64 d = static_cast<i64>(r % p3) - static_cast<i64>(target % p3);
        u64 dd = static_cast<u64>(((d % static_cast<i64>(p3)) + static_cast<i64>(p3)) %
                                  static_cast<i64>(p3));
        if (dd == 0) return static_cast<u64>(3); // exact mod p^3, enough resolution here
        while (dd % p == 0) { dd /= p; ++v; }
        return v;
    };

    if (a == 3) {
        if (rp != 0 && rp != 1 && rp != 2) return TheoremLabel::ind(a + 1, p);
        if (rp == 0) return TheoremLabel::ind(a + 2 * static_cast<i64>(p) - 1, p);
        if (rp == 2) return TheoremLabel::ind(a + static_cast<i64>(p), p);
        // r = 1 mod p: split on r - (p+1)
        if (vdiff(p + 1) == 1) return TheoremLabel::ind(a + static_cast<i64>(p), p);
        return TheoremLabel::ind(a + 2 * static_cast<i64>(p) - 1, p);
    }
    if (a == 4) {
        if (rp == 4) return TheoremLabel::ind(a + 1, p);
        if (rp == 3) return TheoremLabel::ind(a + static_cast<i64>(p), p);
        return TheoremLabel::ind(a + 2 * static_cast<i64>(p) - 1, p); // r = 2 and the generic row
    }
    if (a == p + 1) {
        if (rp != 0 && rp != 1) return TheoremLabel::ind(a + 2 * static_cast<i64>(p) - 1, p);
        if (rp == 1) return TheoremLabel::ind(a + static_cast<i64>(p), p);
        // r = 0 mod p: split on r - p
        if (vdiff(p) == 1) return TheoremLabel::ind(a + static_cast<i64>(p), p);
        return TheoremLabel::ind(a + 2 * static_cast<i64>(p) - 1, p);
    }
    if (a == p) {
        if (rp == 0) {
            u64 v = vdiff(p);
            if (v == 1 || v == 2) return TheoremLabel::ind(a + static_cast<i64>(p), p);
            return TheoremLabel::reducible(p); // p^3 | p - r
        }
        if (rp != (a - 1) % p) return TheoremLabel::ind(a + 2 * static_cast<i64>(p) - 1, p);
        if (vdiff(a - 1) == 1) return TheoremLabel::ind(a + static_cast<i64>(p), p);
        return TheoremLabel::ind(a + 2 * static_cast<i64>(p) - 1, p);
    }
    // 5 <= a <= p-1
    if (a == 5 && (rp == 2 || rp == 3))
        return TheoremLabel::ind(a + 2 * static_cast<i64>(p) - 1, p);
    if (rp == a % p) {
        if (vdiff(a) == 1) return TheoremLabel::ind(a + static_cast<i64>(p), p);
        return TheoremLabel::ind(a + 1, p); // r = a mod p^2
    }
    if (a >= 6) {
        if (rp != (a - 1) % p) return TheoremLabel::ind(a + 2 * static_cast<i64>(p) - 1, p);
        if (vdiff(a - 1) == 1) return TheoremLabel::ind(a + static_cast<i64>(p), p);
        return TheoremLabel::ind(a + 2 * static_cast<i64>(p) - 1, p);
    }
    return TheoremLabel::open_case("a=5 outside the addressed congruence classes");
}

} // namespace padicrep
