#pragma once

#include "padicrep/fp.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace padicrep {

// Truncated Eisenstein extension O_E / pi^K with pi^e = p.
// Elements are stored as e residue components mod p^M for the basis
// 1, pi, ..., pi^{e-1}, where M = ceil(K / e); the usable grid is e*M
// pi-digits, at least K.
struct PiRing {
    u32 p = 0;
    u32 e = 1;
    u32 prec = 16; // requested precision in pi-digits

    u32 comp_digits() const { return (prec + e - 1) / e; }
    u32 grid() const { return e * comp_digits(); }
    u64 comp_mod() const;

    friend bool operator==(const PiRing&, const PiRing&) = default;
};

class PiAdic {
  public:
    PiAdic() = default;
    PiAdic(PiRing ring, i64 integer); // exact integer, full-grid precision
    static PiAdic zero(PiRing ring);
    static PiAdic from_residue(PiRing ring, u64 residue_mod_comp); // component 0

    const PiRing& ring() const { return ring_; }
    bool exact_zero() const { return exact_zero_; }
    u32 known() const { return known_; } // absolute precision in pi-digits

    // pi-digit at a given position; 0 outside the grid
    u32 digit(i64 pos) const;
    u64 component(u32 i) const { return comp_[i]; }

    // position of the lowest nonzero stored digit, or grid() if none
    u32 min_digit() const;
    // certified lower bound for the pi-valuation
    u32 val_floor() const { return exact_zero_ ? ring_.grid() : std::min(min_digit(), known_); }

    PiAdic& operator+=(const PiAdic& o);
    PiAdic& operator-=(const PiAdic& o);
    friend PiAdic operator+(PiAdic a, const PiAdic& b) { return a += b; }
    friend PiAdic operator-(PiAdic a, const PiAdic& b) { return a -= b; }
    friend PiAdic operator*(const PiAdic& a, const PiAdic& b);

    PiAdic& mul_residue(u64 c); // multiply by an exact integer residue mod p^M
    PiAdic shifted_up(u32 k) const;   // * pi^k within the grid (digits drop off the top)
    PiAdic shifted_down(u32 k) const; // / pi^k, requires the low digits to vanish

    PiAdic inverse() const; // requires pi-valuation 0

    bool is_zero_at_known() const { return min_digit() >= known_ || exact_zero_; }
    std::string str() const;

  private:
    void truncate_to_known();
    PiRing ring_;
    std::array<u64, 4> comp_{0, 0, 0, 0};
    u32 known_ = 0;
    bool exact_zero_ = true;
};

// unit_part * pi^{-shift}; houses a_p, 1/a_p, p^j coefficients.
class PiLaurent {
  public:
    PiLaurent() = default;
    PiLaurent(PiRing ring, i64 integer) : unit_(ring, integer), shift_(0) {}
    PiLaurent(PiAdic unit, i64 shift) : unit_(std::move(unit)), shift_(shift) {}

    static PiLaurent zero(PiRing ring) { return PiLaurent(PiAdic::zero(ring), 0); }
    static PiLaurent pi_power(PiRing ring, i64 k); // pi^k exactly

    const PiRing& ring() const { return unit_.ring(); }
    const PiAdic& unit_part() const { return unit_; }
    i64 shift() const { return shift_; }
    bool exact_zero() const { return unit_.exact_zero(); }

    PiLaurent& operator+=(const PiLaurent& o);
    PiLaurent& operator-=(const PiLaurent& o);
    friend PiLaurent operator+(PiLaurent a, const PiLaurent& b) { return a += b; }
    friend PiLaurent operator-(PiLaurent a, const PiLaurent& b) { return a -= b; }
    friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b);
    PiLaurent operator-() const;

    PiLaurent& mul_residue(u64 c) { unit_.mul_residue(c); return *this; }
    PiLaurent& mul_pi_pow(i64 k) { shift_ -= k; return *this; }   // exact
    PiLaurent& mul_p_pow(i64 t) { shift_ -= i64(ring().e) * t; return *this; }
    PiLaurent inverse() const;

    // exact pi-valuation; nullopt means "zero to working precision"; throws
    // precision_error when the value could hide below the known floor
    std::optional<i64> val_pi() const;
    // v_p as an exact rational (num/den), den = e
    std::optional<std::pair<i64, i64>> val_p() const;

    // certified "v_pi(x) >= t"; throws precision_error if undecidable
    bool val_at_least_pi(i64 t) const;
    bool is_integral() const { return val_at_least_pi(0); }
    // residue mod pi; requires integrality
    u32 residue() const;

    std::string str() const;

  private:
    PiAdic unit_;
    i64 shift_ = 0;
};

} // namespace padicrep
