#include "padicrep/binom.hpp"

namespace padicrep {

u64 pow_u64(u64 p, u32 K) {
    u64 r = 1;
    for (u32 i = 0; i < K; ++i) {
        if (r > UINT64_MAX / p) throw domain_error("pow_u64: overflow");
        r *= p;
    }
    return r;
}

FpScalar lucas_binom(u64 r, u64 n, u32 p) {
    require_prime_ge5(p);
    u64 acc = 1;
    while (n > 0 || r > 0) {
        u64 rd = r % p, nd = n % p;
        if (nd > rd) return FpScalar(p, 0);
        // digit binomial C(rd, nd), rd < p <= 13 so this stays tiny
        u64 num = 1, den = 1;
        for (u64 i = 0; i < nd; ++i) { num *= rd - i; den *= i + 1; }
        acc = acc * ((num / den) % p) % p;
        r /= p; n /= p;
    }
    return FpScalar(p, static_cast<i64>(acc));
}

u64 binom_mod(u64 r, u64 n, u32 p, u32 K) {
    require_prime_ge5(p);
    if (K == 0) throw domain_error("binom_mod: K must be >= 1");
    return big_binomial(r, n).mod_small(pow_u64(p, K));
}

std::vector<u64> binom_row_mod(u64 r, u64 m) {
    PascalRow pr(m);
    pr.step_to(r);
    return pr.row();
}

void PascalRow::step() {
    row_.push_back(0);
    for (size_t i = row_.size() - 1; i > 0; --i) {
        row_[i] += row_[i - 1];
        if (row_[i] >= m_) row_[i] -= m_;
    }
}

void PascalRow::step_to(u64 target) {
    if (target < r()) throw domain_error("PascalRow: cannot step backwards");
    while (r() < target) step();
}

u32 sigma_digits(u64 r, u32 p) {
    require_prime_ge5(p);
    u64 s = 0;
    while (r) { s += r % p; r /= p; }
    return static_cast<u32>(s);
}

bool is_minimal(u64 r, u32 p) { return sigma_digits(r, p) < p; }

u64 teichmuller(u32 lambda, u32 p, u32 K) {
    require_prime_ge5(p);
    u64 m = pow_u64(p, K);
    u64 x = lambda % p;
    if (x == 0) return 0;
    // x -> x^p converges to the unique (p-1)-th root of unity above lambda
    for (;;) {
        u64 y = powmod(x, p, m);
        if (y == x) return x;
        x = y;
    }
}

FpScalar direct_binomial_sum(u64 r, u32 a, u32 i, u32 p) {
    require_prime_ge5(p);
    u64 s = 0;
    if (r >= i + 1) {
        u64 cls = ((static_cast<u64>(a) + p - 1 - i % (p - 1)) % (p - 1));
        for (u64 j = 1; j + i < r; ++j) {
            if (j % (p - 1) == cls % (p - 1))
                s += lucas_binom(r, j, p).v;
        }
    }
    return FpScalar(p, static_cast<i64>(s % p));
}

static void check_sum_preconditions(u64 r, u32 a, u32 i, u32 p) {
    if (i > 2) throw domain_error("closed_binomial_sum: i must be 0, 1 or 2");
    if (a < 1 + i || a > p - 1 + i)
        throw domain_error("closed_binomial_sum: a out of range for this i");
    if (r % (p - 1) != a % (p - 1))
        throw domain_error("closed_binomial_sum: r != a mod p-1");
    if (r < a) throw domain_error("closed_binomial_sum: need r >= a");
}

FpScalar closed_binomial_sum(u64 r, u32 a, u32 i, u32 p) {
    require_prime_ge5(p);
    check_sum_preconditions(r, a, i, p);
    i64 ar = static_cast<i64>(a) - static_cast<i64>(r % p);
    switch (i) {
        case 0: return FpScalar(p, 0);
        case 1: return FpScalar(p, ar);
        default: {
            i64 s = ar % p * ((static_cast<i64>(a) + static_cast<i64>(r % p) - 1) % p) % p;
            return FpScalar(p, s) * fp_inv(FpScalar(p, 2));
        }
    }
}

FpScalar remark_binomial_sum(u64 r, u32 a, u32 i, u32 p) {
    require_prime_ge5(p);
    FpScalar ca = lucas_binom(a, i, p);
    FpScalar cr = lucas_binom(r, i, p);
    return ca - cr;
}

u64 refined_sum_p3(u64 r, u32 p) {
    require_prime_ge5(p);
    if (r % (p - 1) != 1 % (p - 1))
        throw domain_error("refined_sum_p3: need r = 1 mod p-1");
    i64 diff = static_cast<i64>(r) - p;
    if (diff % static_cast<i64>(static_cast<u64>(p) * p) != 0)
        throw domain_error("refined_sum_p3: need p^2 | p-r");
    u64 m = pow_u64(p, 3);
    if (r <= p) return 0; // empty sum
    auto row = binom_row_mod(r, m);
    u64 s = 0;
    for (u64 j = 1 + (p - 1); j < r; j += p - 1)
        s = (s + row[j]) % m;
    return s;
}

} // namespace padicrep
