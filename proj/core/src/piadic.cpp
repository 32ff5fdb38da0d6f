#include "padicrep/piadic.hpp"

#include "padicrep/binom.hpp"

#include <algorithm>
#include <sstream>

namespace padicrep {

u64 PiRing::comp_mod() const { return pow_u64(p, comp_digits()); }

static void check_ring(const PiRing& r) {
    require_prime_ge5(r.p);
    if (r.e < 1 || r.e > 4) throw domain_error("PiRing: e must be in [1,4]");
    if (r.prec < 4) throw domain_error("PiRing: precision too small");
    (void)r.comp_mod(); // overflow check
}

static void check_same_ring(const PiRing& a, const PiRing& b) {
    if (!(a == b)) throw domain_error("PiAdic: mixed rings");
}

PiAdic PiAdic::zero(PiRing ring) {
    check_ring(ring);
    PiAdic x;
    x.ring_ = ring;
    x.known_ = ring.grid();
    x.exact_zero_ = true;
    return x;
}

PiAdic::PiAdic(PiRing ring, i64 integer) {
    check_ring(ring);
    ring_ = ring;
    known_ = ring.grid();
    u64 m = ring.comp_mod();
    i64 v = integer % static_cast<i64>(m);
    if (v < 0) v += static_cast<i64>(m);
    comp_[0] = static_cast<u64>(v);
    exact_zero_ = (integer == 0);
}

PiAdic PiAdic::from_residue(PiRing ring, u64 residue) {
    check_ring(ring);
    PiAdic x;
    x.ring_ = ring;
    x.known_ = ring.grid();
    x.comp_[0] = residue % ring.comp_mod();
    x.exact_zero_ = false;
    return x;
}

u32 PiAdic::digit(i64 pos) const {
    if (pos < 0 || pos >= static_cast<i64>(ring_.grid())) return 0;
    u32 i = static_cast<u32>(pos % ring_.e);
    u32 k = static_cast<u32>(pos / ring_.e);
    u64 c = comp_[i];
    for (u32 t = 0; t < k; ++t) c /= ring_.p;
    return static_cast<u32>(c % ring_.p);
}

u32 PiAdic::min_digit() const {
    u32 best = ring_.grid();
    for (u32 i = 0; i < ring_.e; ++i) {
        u64 c = comp_[i];
        if (c == 0) continue;
        u32 v = 0;
        while (c % ring_.p == 0) { c /= ring_.p; ++v; }
        best = std::min(best, i + ring_.e * v);
    }
    return best;
}

void PiAdic::truncate_to_known() {
    if (known_ >= ring_.grid()) return;
    for (u32 i = 0; i < ring_.e; ++i) {
        // zero digits at positions >= known_: component i holds positions i, i+e, ...
        u32 keep = known_ > i ? (known_ - i + ring_.e - 1) / ring_.e : 0;
        if (keep >= ring_.comp_digits()) continue;
        u64 m = pow_u64(ring_.p, keep);
        comp_[i] %= m;
    }
}

PiAdic& PiAdic::operator+=(const PiAdic& o) {
    check_same_ring(ring_, o.ring_);
    u64 m = ring_.comp_mod();
    for (u32 i = 0; i < ring_.e; ++i) comp_[i] = (comp_[i] + o.comp_[i]) % m;
    known_ = std::min(known_, o.known_);
    exact_zero_ = exact_zero_ && o.exact_zero_;
    truncate_to_known();
    return *this;
}

PiAdic& PiAdic::operator-=(const PiAdic& o) {
    check_same_ring(ring_, o.ring_);
    u64 m = ring_.comp_mod();
    for (u32 i = 0; i < ring_.e; ++i) comp_[i] = (comp_[i] + m - o.comp_[i]) % m;
    known_ = std::min(known_, o.known_);
    exact_zero_ = exact_zero_ && o.exact_zero_;
    truncate_to_known();
    return *this;
}

PiAdic operator*(const PiAdic& a, const PiAdic& b) {
    check_same_ring(a.ring_, b.ring_);
    PiAdic out = PiAdic::zero(a.ring_);
    if (a.exact_zero_ || b.exact_zero_) return out;
    const u32 e = a.ring_.e;
    const u64 m = a.ring_.comp_mod();
    const u32 p = a.ring_.p;
    out.exact_zero_ = false;
    for (u32 i = 0; i < e; ++i) {
        if (a.comp_[i] == 0) continue;
        for (u32 j = 0; j < e; ++j) {
            if (b.comp_[j] == 0) continue;
            u64 prod = mulmod(a.comp_[i], b.comp_[j], m);
            u32 k = i + j;
            if (k >= e) { // pi^e = p
                k -= e;
                prod = mulmod(prod, p, m);
            }
            out.comp_[k] = (out.comp_[k] + prod) % m;
        }
    }
    u32 ka = a.exact_zero_ ? a.ring_.grid() : a.known_;
    u32 kb = b.exact_zero_ ? b.ring_.grid() : b.known_;
    u64 bound1 = static_cast<u64>(a.val_floor()) + kb;
    u64 bound2 = static_cast<u64>(b.val_floor()) + ka;
    out.known_ = static_cast<u32>(std::min<u64>({bound1, bound2, a.ring_.grid()}));
    out.truncate_to_known();
    return out;
}

PiAdic& PiAdic::mul_residue(u64 c) {
    if (exact_zero_) return *this;
    u64 m = ring_.comp_mod();
    c %= m;
    if (c == 0) { *this = PiAdic(ring_, 0); exact_zero_ = false; known_ = ring_.grid(); return *this; }
    u32 vc = 0;
    u64 cc = c;
    while (cc % ring_.p == 0) { cc /= ring_.p; ++vc; }
    for (u32 i = 0; i < ring_.e; ++i) comp_[i] = mulmod(comp_[i], c, m);
    known_ = static_cast<u32>(std::min<u64>(static_cast<u64>(known_) + ring_.e * vc, ring_.grid()));
    truncate_to_known();
    return *this;
}

PiAdic PiAdic::shifted_up(u32 k) const {
    PiAdic out = *this;
    const u32 e = ring_.e;
    const u64 m = ring_.comp_mod();
    for (u32 t = 0; t < k; ++t) {
        // multiply by pi: component rotation with a p at the wraparound
        u64 top = out.comp_[e - 1];
        for (u32 i = e - 1; i > 0; --i) out.comp_[i] = out.comp_[i - 1];
        out.comp_[0] = mulmod(top, ring_.p, m);
    }
    out.known_ = static_cast<u32>(std::min<u64>(static_cast<u64>(known_) + k, ring_.grid()));
    out.truncate_to_known();
    return out;
}

PiAdic PiAdic::shifted_down(u32 k) const {
    if (min_digit() < k && min_digit() < known_)
        throw domain_error("PiAdic: shifted_down would truncate nonzero digits");
    PiAdic out = *this;
    const u32 e = ring_.e;
    for (u32 t = 0; t < k; ++t) {
        u64 low = out.comp_[0];
        if (low % ring_.p != 0) throw domain_error("PiAdic: not divisible by pi");
        for (u32 i = 0; i + 1 < e; ++i) out.comp_[i] = out.comp_[i + 1];
        out.comp_[e - 1] = low / ring_.p;
    }
    out.known_ = known_ > k ? known_ - k : 0;
    out.truncate_to_known();
    return out;
}

PiAdic PiAdic::inverse() const {
    if (exact_zero_ || digit(0) == 0)
        throw domain_error("PiAdic: inverse needs pi-valuation 0");
    PiAdic two(ring_, 2);
    PiAdic z = PiAdic::from_residue(ring_, invmod(comp_[0] % ring_.p, ring_.p));
    z.known_ = known_;
    // Newton: z <- z(2 - xz) doubles pi-adic accuracy each step
    u32 steps = 1;
    while ((1u << steps) < ring_.grid()) ++steps;
    for (u32 s = 0; s <= steps; ++s) z = z * (two - (*this) * z);
    z.known_ = known_;
    z.truncate_to_known();
    return z;
}

std::string PiAdic::str() const {
    std::ostringstream os;
    os << "[";
    for (u32 i = 0; i < ring_.e; ++i) os << (i ? "," : "") << comp_[i];
    os << "]@" << known_;
    return os.str();
}

// ---- PiLaurent ----

PiLaurent PiLaurent::pi_power(PiRing ring, i64 k) {
    PiLaurent x(PiAdic(ring, 1), -k);
    return x;
}

static void align(PiAdic& ua, i64& sa, const PiAdic& ub, i64 sb, PiAdic& ub_out) {
    // bring both to the common shift max(sa, sb)
    i64 s = std::max(sa, sb);
    ua = ua.shifted_up(static_cast<u32>(s - sa));
    ub_out = ub.shifted_up(static_cast<u32>(s - sb));
    sa = s;
}

PiLaurent& PiLaurent::operator+=(const PiLaurent& o) {
    check_same_ring(ring(), o.ring());
    PiAdic ub = PiAdic::zero(ring());
    align(unit_, shift_, o.unit_, o.shift_, ub);
    unit_ += ub;
    return *this;
}

PiLaurent& PiLaurent::operator-=(const PiLaurent& o) {
    check_same_ring(ring(), o.ring());
    PiAdic ub = PiAdic::zero(ring());
    align(unit_, shift_, o.unit_, o.shift_, ub);
    unit_ -= ub;
    return *this;
}

PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
    return PiLaurent(a.unit_ * b.unit_, a.shift_ + b.shift_);
}

PiLaurent PiLaurent::operator-() const {
    PiLaurent out = *this;
    out.unit_.mul_residue(ring().comp_mod() - 1);
    return out;
}

PiLaurent PiLaurent::inverse() const {
    auto v = val_pi();
    if (!v) throw domain_error("PiLaurent: cannot invert zero (to working precision)");
    u32 md = unit_.min_digit();
    PiAdic u = unit_.shifted_down(md);
    return PiLaurent(u.inverse(), static_cast<i64>(md) - shift_);
}

std::optional<i64> PiLaurent::val_pi() const {
    if (unit_.exact_zero()) return std::nullopt;
    u32 md = unit_.min_digit();
    if (md < unit_.known()) return static_cast<i64>(md) - shift_;
    if (unit_.known() == ring().grid()) return std::nullopt; // full-precision zero
    throw precision_error("PiLaurent: valuation below the known-precision floor");
}

std::optional<std::pair<i64, i64>> PiLaurent::val_p() const {
    auto v = val_pi();
    if (!v) return std::nullopt;
    return std::make_pair(*v, static_cast<i64>(ring().e));
}

bool PiLaurent::val_at_least_pi(i64 t) const {
    if (unit_.exact_zero()) return true;
    i64 pos = t + shift_;
    if (pos <= 0) return true;
    u32 md = unit_.min_digit();
    if (md < static_cast<u32>(pos) && md < unit_.known()) return false;
    if (unit_.known() < static_cast<u32>(std::min<i64>(pos, ring().grid())))
        throw precision_error("PiLaurent: integrality undecidable at working precision");
    return md >= static_cast<u32>(std::min<i64>(pos, ring().grid()));
}

u32 PiLaurent::residue() const {
    if (!val_at_least_pi(0)) throw domain_error("PiLaurent: residue of a non-integral value");
    if (shift_ < 0) return 0; // a positive pi-power times an integral unit
    if (unit_.known() <= static_cast<u32>(shift_) && !unit_.exact_zero())
        throw precision_error("PiLaurent: residue below known precision");
    return unit_.digit(shift_);
}

std::string PiLaurent::str() const {
    std::ostringstream os;
    os << unit_.str() << "*pi^-" << shift_;
    return os.str();
}

} // namespace padicrep
