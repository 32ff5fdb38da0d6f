#pragma once

#include "padicrep/fp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace padicrep {

// Homogeneous degree-r polynomial over F_p: coeffs[j] is the coefficient of
// X^{r-j} Y^j (indexing by Y-degree, the paper's c_j convention).
struct HomPoly {
    u32 p = 0;
    u64 r = 0;
    std::vector<u32> coeffs; // length r+1

    HomPoly() = default;
    HomPoly(u32 prime, u64 degree);

    static HomPoly monomial(u32 p, u64 r, u64 ydeg, i64 c = 1);
    static HomPoly theta(u32 p); // X^p Y - X Y^p in V_{p+1}

    bool is_zero() const;
    u32 at(u64 j) const { return coeffs.at(j); }
    void set(u64 j, i64 c);
    void add_to(u64 j, i64 c);

    friend bool operator==(const HomPoly&, const HomPoly&) = default;
    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    HomPoly scaled(i64 c) const;
    HomPoly operator*(const HomPoly& o) const; // degree adds
};

// 2x2 matrix over F_p; determinant may vanish (monoid M).
struct Mat2 {
    u32 p = 0;
    u32 a = 0, b = 0, c = 0, d = 0;

    Mat2() = default;
    Mat2(u32 prime, i64 aa, i64 bb, i64 cc, i64 dd);
    u32 det() const { return static_cast<u32>((static_cast<u64>(a) * d + static_cast<u64>(p) * p -
                                               static_cast<u64>(b) * c) % p); }
    static Mat2 identity(u32 p) { return Mat2(p, 1, 0, 0, 1); }
    Mat2 operator*(const Mat2& o) const;
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Substitution action X -> aX + cY, Y -> bX + dY for m = (a b; c d).
// Left monoid action: act(mn, f) = act(m, act(n, f)).
HomPoly act(const Mat2& m, const HomPoly& f);

HomPoly theta_mul(const HomPoly& f);                      // degree r -> r + p + 1
std::optional<HomPoly> theta_divide(const HomPoly& f);    // exact division or nullopt
bool theta_power_divides(const HomPoly& f, u32 k);

// Coefficientwise membership test for V_r^{*k}, k = 1, 2, 3. Requires the
// indices of all nonzero coefficients to agree mod p-1 (throws otherwise).
bool singular_criterion(const HomPoly& f, u32 k);

std::string render_poly(const HomPoly& f);          // "c*X^i*Y^j + ..."
HomPoly parse_poly(u32 p, u64 r, const std::string& text);

} // namespace padicrep
