#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padicrep {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime_ge5(u32 p) {
    if (p < 5 || !is_prime(p))
        throw domain_error("p must be a prime >= 5, got " + std::to_string(p));
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Inverse mod m for x coprime to m (extended Euclid; m need not be prime).
inline u64 invmod(u64 x, u64 m) {
    i64 a = static_cast<i64>(x % m), b = static_cast<i64>(m);
    i64 u = 1, v = 0;
    while (b) {
        i64 q = a / b;
        a -= q * b; std::swap(a, b);
        u -= q * v; std::swap(u, v);
    }
    if (a != 1) throw domain_error("invmod: argument not invertible");
    i64 r = u % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

// Element of F_p. Carries its prime so mixed-modulus bugs fail loudly.
struct FpScalar {
    u32 p = 0;
    u32 v = 0;

    FpScalar() = default;
    FpScalar(u32 prime, i64 value) : p(prime) {
        require_prime_ge5(prime);
        i64 m = value % static_cast<i64>(prime);
        v = static_cast<u32>(m < 0 ? m + prime : m);
    }

    friend bool operator==(const FpScalar&, const FpScalar&) = default;
};

inline void check_same_p(const FpScalar& a, const FpScalar& b) {
    if (a.p != b.p) throw domain_error("FpScalar: mixed primes");
}

inline FpScalar operator+(FpScalar a, FpScalar b) {
    check_same_p(a, b);
    return FpScalar(a.p, static_cast<i64>(a.v) + b.v);
}
inline FpScalar operator-(FpScalar a, FpScalar b) {
    check_same_p(a, b);
    return FpScalar(a.p, static_cast<i64>(a.v) - b.v);
}
inline FpScalar operator*(FpScalar a, FpScalar b) {
    check_same_p(a, b);
    return FpScalar(a.p, static_cast<i64>(a.v) * b.v);
}

inline FpScalar fp_inv(FpScalar x) {
    if (x.v == 0) throw domain_error("fp_inv: division by zero in F_p");
    return FpScalar(x.p, static_cast<i64>(powmod(x.v, x.p - 2, x.p)));
}

inline u32 fp_inv_raw(u32 x, u32 p) {
    if (x % p == 0) throw domain_error("fp_inv: division by zero in F_p");
    return static_cast<u32>(powmod(x, p - 2, p));
}

// Least primitive root mod p.
inline u32 primitive_root(u32 p) {
    require_prime_ge5(p);
    for (u32 g = 2; g < p; ++g) {
        bool ok = true;
        for (u32 q = 2; q <= (p - 1) / 2 && ok; ++q) {
            if ((p - 1) % q == 0 && is_prime(q) && powmod(g, (p - 1) / q, p) == 1) ok = false;
        }
        if (ok) return g;
    }
    throw internal_error("primitive_root: none found");
}

} // namespace padicrep
