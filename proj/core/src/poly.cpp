#include "padicrep/poly.hpp"

#include <cstdio>
#include <sstream>

namespace padicrep {

HomPoly::HomPoly(u32 prime, u64 degree) : p(prime), r(degree), coeffs(degree + 1, 0) {
    require_prime_ge5(prime);
}

HomPoly HomPoly::monomial(u32 p, u64 r, u64 ydeg, i64 c) {
    HomPoly f(p, r);
    f.set(ydeg, c);
    return f;
}

HomPoly HomPoly::theta(u32 p) {
    HomPoly t(p, static_cast<u64>(p) + 1);
    t.set(1, 1);
    t.set(p, -1);
    return t;
}

bool HomPoly::is_zero() const {
    for (u32 c : coeffs)
        if (c) return false;
    return true;
}

void HomPoly::set(u64 j, i64 c) {
    i64 m = c % static_cast<i64>(p);
    coeffs.at(j) = static_cast<u32>(m < 0 ? m + p : m);
}

void HomPoly::add_to(u64 j, i64 c) {
    set(j, static_cast<i64>(coeffs.at(j)) + c);
}

static void check_compatible(const HomPoly& a, const HomPoly& b) {
    if (a.p != b.p || a.r != b.r) throw domain_error("HomPoly: mixed ambient spaces");
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    check_compatible(*this, o);
    for (u64 j = 0; j <= r; ++j) {
        coeffs[j] += o.coeffs[j];
        if (coeffs[j] >= p) coeffs[j] -= p;
    }
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    check_compatible(*this, o);
    for (u64 j = 0; j <= r; ++j) {
        coeffs[j] += p - o.coeffs[j];
        if (coeffs[j] >= p) coeffs[j] -= p;
    }
    return *this;
}

HomPoly HomPoly::scaled(i64 c) const {
    i64 m = c % static_cast<i64>(p);
    u32 cc = static_cast<u32>(m < 0 ? m + p : m);
    HomPoly out(p, r);
    for (u64 j = 0; j <= r; ++j) out.coeffs[j] = static_cast<u32>(static_cast<u64>(coeffs[j]) * cc % p);
    return out;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    if (p != o.p) throw domain_error("HomPoly: mixed primes");
    HomPoly out(p, r + o.r);
    for (u64 i = 0; i <= r; ++i) {
        if (!coeffs[i]) continue;
        for (u64 j = 0; j <= o.r; ++j) {
            if (!o.coeffs[j]) continue;
            out.coeffs[i + j] = static_cast<u32>((out.coeffs[i + j] +
                                                  static_cast<u64>(coeffs[i]) * o.coeffs[j]) % p);
        }
    }
    return out;
}

Mat2::Mat2(u32 prime, i64 aa, i64 bb, i64 cc, i64 dd) : p(prime) {
    require_prime_ge5(prime);
    auto red = [&](i64 x) {
        i64 m = x % static_cast<i64>(prime);
        return static_cast<u32>(m < 0 ? m + prime : m);
    };
    a = red(aa); b = red(bb); c = red(cc); d = red(dd);
}

Mat2 Mat2::operator*(const Mat2& o) const {
    if (p != o.p) throw domain_error("Mat2: mixed primes");
    return Mat2(p,
                static_cast<i64>(a) * o.a + static_cast<i64>(b) * o.c,
                static_cast<i64>(a) * o.b + static_cast<i64>(b) * o.d,
                static_cast<i64>(c) * o.a + static_cast<i64>(d) * o.c,
                static_cast<i64>(c) * o.b + static_cast<i64>(d) * o.d);
}

// Y -> uX + Y: new_k = sum_{j >= k} c_j C(j, k) u^{j-k}
static void shear_upper(HomPoly& f, u32 u) {
    const u32 p = f.p;
    const u64 r = f.r;
    if (u == 0) return;
    std::vector<u32> out(r + 1, 0);
    std::vector<u32> upow(r + 1);
    upow[0] = 1;
    for (u64 t = 1; t <= r; ++t) upow[t] = static_cast<u32>(static_cast<u64>(upow[t - 1]) * u % p);
    std::vector<u32> pascal{1}; // row j of C(j, k), extended as j grows
    for (u64 j = 0; j <= r; ++j) {
        if (j > 0) {
            pascal.push_back(0);
            for (u64 t = j; t > 0; --t) {
                pascal[t] += pascal[t - 1];
                if (pascal[t] >= p) pascal[t] -= p;
            }
        }
        u32 cj = f.coeffs[j];
        if (!cj) continue;
        for (u64 k = 0; k <= j; ++k) {
            if (!pascal[k]) continue;
            u64 add = static_cast<u64>(cj) * pascal[k] % p * upow[j - k] % p;
            out[k] = static_cast<u32>((out[k] + add) % p);
        }
    }
    f.coeffs = std::move(out);
}

// X -> X + lY: new_k = sum_{j <= k} c_j C(r-j, k-j) l^{k-j}
static void shear_lower(HomPoly& f, u32 l) {
    const u32 p = f.p;
    const u64 r = f.r;
    if (l == 0) return;
    std::vector<u32> out(r + 1, 0);
    std::vector<u32> lpow(r + 1);
    lpow[0] = 1;
    for (u64 t = 1; t <= r; ++t) lpow[t] = static_cast<u32>(static_cast<u64>(lpow[t - 1]) * l % p);
    // reuse the upper shear through the X<->Y swap
    std::vector<u32> pascal{1};
    for (u64 i = 0; i <= r; ++i) { // i = r - j, row of C(i, t)
        if (i > 0) {
            pascal.push_back(0);
            for (u64 t = i; t > 0; --t) {
                pascal[t] += pascal[t - 1];
                if (pascal[t] >= p) pascal[t] -= p;
            }
        }
        u64 j = r - i;
        u32 cj = f.coeffs[j];
        if (!cj) continue;
        for (u64 t = 0; t <= i; ++t) {
            if (!pascal[t]) continue;
            u64 k = j + t;
            u64 add = static_cast<u64>(cj) * pascal[t] % p * lpow[t] % p;
            out[k] = static_cast<u32>((out[k] + add) % p);
        }
    }
    f.coeffs = std::move(out);
}

static void diag_scale(HomPoly& f, u32 a, u32 d) {
    const u32 p = f.p;
    const u64 r = f.r;
    u64 apow = powmod(a, r, p);
    if (a == 0) { // diag(0, d): only Y^r survives
        std::vector<u32> out(r + 1, 0);
        out[r] = static_cast<u32>(static_cast<u64>(f.coeffs[r]) * powmod(d, r, p) % p);
        f.coeffs = std::move(out);
        return;
    }
    u64 ainv = powmod(a, p - 2, p);
    u64 scale = apow;
    for (u64 j = 0; j <= r; ++j) {
        f.coeffs[j] = static_cast<u32>(static_cast<u64>(f.coeffs[j]) * scale % p);
        scale = scale * ainv % p * d % p;
    }
}

static void swap_xy(HomPoly& f) {
    for (u64 j = 0, k = f.r; j < k; ++j, --k) std::swap(f.coeffs[j], f.coeffs[k]);
}

// rank <= 1: both substituted forms are proportional, so the image is a line
static HomPoly act_singular(const Mat2& m, const HomPoly& f) {
    const u32 p = m.p;
    const u64 r = f.r;
    HomPoly out(p, r);
    if (r == 0) { out.coeffs[0] = f.coeffs[0]; return out; }
    bool col1 = (m.a || m.c);
    if (!col1 && !(m.b || m.d)) return out; // zero matrix, r > 0
    u32 ua, uc;      // the image line u = ua X + uc Y
    u64 scalar = 0;  // f evaluated along the proportionality
    if (col1) {
        ua = m.a; uc = m.c;
        // (b, d) = t (a, c)
        u64 t = m.a ? static_cast<u64>(m.b) * powmod(m.a, p - 2, p) % p
                    : static_cast<u64>(m.d) * powmod(m.c, p - 2, p) % p;
        u64 tp = 1;
        for (u64 j = 0; j <= r; ++j) {
            scalar = (scalar + static_cast<u64>(f.coeffs[j]) * tp) % p;
            tp = tp * t % p;
        }
    } else {
        ua = m.b; uc = m.d;
        scalar = f.coeffs[r]; // X -> 0 kills everything but Y^r
    }
    if (scalar == 0) return out;
    // scalar * (ua X + uc Y)^r by binomial expansion
    std::vector<u32> pascalrow(r + 1, 0);
    pascalrow[0] = 1;
    for (u64 j = 1; j <= r; ++j)
        for (u64 t = j; t > 0; --t) {
            pascalrow[t] += pascalrow[t - 1];
            if (pascalrow[t] >= p) pascalrow[t] -= p;
        }
    u64 capow = powmod(ua, r, p);
    u64 cainv = ua ? powmod(ua, p - 2, p) : 0;
    u64 term = capow;
    for (u64 j = 0; j <= r; ++j) {
        // coefficient of X^{r-j} Y^j in (ua X + uc Y)^r
        u64 coef;
        if (ua) {
            coef = pascalrow[j] * term % p;
            term = term * cainv % p * uc % p;
        } else {
            coef = (j == r) ? powmod(uc, r, p) : 0;
        }
        out.coeffs[j] = static_cast<u32>(scalar * coef % p);
    }
    return out;
}

HomPoly act(const Mat2& m, const HomPoly& f) {
    if (m.p != f.p) throw domain_error("act: mixed primes");
    if (m.det() == 0) return act_singular(m, f);
    HomPoly g = f;
    if (m.a != 0) {
        // (a b; c d) = (1 0; c/a 1) diag(a, det/a) (1 b/a; 0 1), applied inside out
        u64 ainv = powmod(m.a, m.p - 2, m.p);
        u32 u = static_cast<u32>(static_cast<u64>(m.b) * ainv % m.p);
        u32 l = static_cast<u32>(static_cast<u64>(m.c) * ainv % m.p);
        u32 dd = static_cast<u32>(static_cast<u64>(m.det()) * ainv % m.p);
        shear_upper(g, u);
        diag_scale(g, m.a, dd);
        shear_lower(g, l);
        return g;
    }
    // a = 0, bc != 0: swap first
    swap_xy(g); // act of (0 1; 1 0)
    Mat2 mm(m.p, m.b, m.a, m.d, m.c); // m * swap, upper-left now nonzero
    return act(mm, g);
}

HomPoly theta_mul(const HomPoly& f) {
    const u32 p = f.p;
    HomPoly out(p, f.r + p + 1);
    for (u64 j = 0; j <= f.r; ++j) {
        if (!f.coeffs[j]) continue;
        out.add_to(j + 1, f.coeffs[j]);            // X^p Y * X^{r-j} Y^j
        out.add_to(j + p, -i64(f.coeffs[j]));      // - X Y^p * ...
    }
    return out;
}

std::optional<HomPoly> theta_divide(const HomPoly& f) {
    const u32 p = f.p;
    if (f.r < static_cast<u64>(p) + 1) return f.is_zero() ? std::optional<HomPoly>(HomPoly(p, 0))
                                                          : std::nullopt;
    if (f.is_zero()) return HomPoly(p, f.r - p - 1);
    const u64 rg = f.r - p - 1;
    // c_j = g_{j-1} - g_{j-p}; solve upward, then check the tail
    HomPoly g(p, rg);
    if (f.coeffs[0] != 0) return std::nullopt;
    auto gat = [&](i64 k) -> i64 {
        return (k < 0 || k > static_cast<i64>(rg)) ? 0 : static_cast<i64>(g.coeffs[k]);
    };
    for (u64 j = 1; j <= rg + 1; ++j)
        g.set(j - 1, static_cast<i64>(f.coeffs[j]) + gat(static_cast<i64>(j) - p));
    for (u64 j = rg + 2; j <= f.r; ++j) {
        i64 expect = gat(static_cast<i64>(j) - 1) - gat(static_cast<i64>(j) - p);
        i64 got = static_cast<i64>(f.coeffs[j]);
        if (((expect - got) % static_cast<i64>(p) + p) % p != 0) return std::nullopt;
    }
    return g;
}

bool theta_power_divides(const HomPoly& f, u32 k) {
    HomPoly g = f;
    for (u32 i = 0; i < k; ++i) {
        auto q = theta_divide(g);
        if (!q) return false;
        g = *q;
    }
    return true;
}

bool singular_criterion(const HomPoly& f, u32 k) {
    if (k < 1 || k > 3) throw domain_error("singular_criterion: k must be 1, 2 or 3");
    const u32 p = f.p;
    const u64 r = f.r;
    // hypothesis: indices of nonzero coefficients all congruent mod p-1
    std::optional<u64> cls;
    for (u64 j = 0; j <= r; ++j) {
        if (!f.coeffs[j]) continue;
        u64 c = j % (p - 1);
        if (!cls) cls = c;
        else if (*cls != c)
            throw domain_error("singular_criterion: nonzero indices not congruent mod p-1");
    }
    if (!cls) return true; // zero polynomial
    auto csum = [&](u32 weight) {
        u64 s = 0;
        for (u64 j = 0; j <= r; ++j) {
            if (!f.coeffs[j]) continue;
            u64 w = 1;
            if (weight >= 1) w = j % p;
            if (weight == 2) w = w * ((j + p - 1) % p) % p;
            s = (s + static_cast<u64>(f.coeffs[j]) * w) % p;
        }
        return s;
    };
    auto ends_zero = [&](u64 count) {
        for (u64 t = 0; t < count; ++t)
            if (f.coeffs[t] != 0 || f.coeffs[r - t] != 0) return false;
        return true;
    };
    if (k == 1) return ends_zero(1) && csum(0) == 0;
    if (k == 2) return ends_zero(2) && csum(0) == 0 && csum(1) == 0;
    return ends_zero(3) && csum(0) == 0 && csum(1) == 0 && csum(2) == 0;
}

std::string render_poly(const HomPoly& f) {
    std::ostringstream os;
    bool first = true;
    for (u64 j = 0; j <= f.r; ++j) {
        if (!f.coeffs[j]) continue;
        if (!first) os << " + ";
        first = false;
        os << f.coeffs[j] << "*X^" << (f.r - j) << "*Y^" << j;
    }
    if (first) os << "0";
    return os.str();
}

HomPoly parse_poly(u32 p, u64 r, const std::string& text) {
    HomPoly f(p, r);
    std::istringstream is(text);
    std::string term;
    while (std::getline(is, term, '+')) {
        unsigned long long c = 0, xi = 0, yj = 0;
        if (term.find_first_not_of(" \t0") == std::string::npos) continue;
        if (std::sscanf(term.c_str(), " %llu*X^%llu*Y^%llu", &c, &xi, &yj) != 3)
            throw domain_error("parse_poly: malformed term '" + term + "'");
        if (xi + yj != r) throw domain_error("parse_poly: term degree mismatch");
        f.add_to(yj, static_cast<i64>(c));
    }
    return f;
}

} // namespace padicrep
