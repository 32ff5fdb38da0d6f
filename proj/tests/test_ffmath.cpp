#include <doctest.h>

#include "padicrep/binom.hpp"
#include "padicrep/corrections.hpp"

#include <random>

using namespace padicrep;

TEST_CASE("fp_inv basics") {
    CHECK(fp_inv(FpScalar(5, 1)).v == 1);
    CHECK(fp_inv(FpScalar(5, 2)).v == 3); // exhaustive: 2*3 = 6 = 1 mod 5
    CHECK(fp_inv(FpScalar(7, 3)).v == 5); // 3*5 = 15 = 1 mod 7
    CHECK_THROWS_AS(fp_inv(FpScalar(5, 0)), domain_error);
    for (u32 p : {5u, 7u, 11u})
        for (u32 x = 1; x < p; ++x)
            CHECK((fp_inv(FpScalar(p, x)) * FpScalar(p, x)).v == 1);
}

TEST_CASE("lucas binomials") {
    CHECK(lucas_binom(17, 0, 5).v == 1);
    CHECK(lucas_binom(5, 2, 5).v == 0);  // digit C(0,2) forces zero
    CHECK(lucas_binom(23, 16, 7).v == 3); // C(23,16) = 245157 = 3 mod 7
    // against the exact big-integer path
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        u64 r = rng() % 2000;
        u64 n = r ? rng() % (r + 1) : 0;
        u32 p = std::vector<u32>{5, 7, 11}[rng() % 3];
        CHECK(lucas_binom(r, n, p).v == binom_mod(r, n, p, 1));
    }
}

TEST_CASE("binom_mod exact values") {
    CHECK(binom_mod(10, 10, 5, 2) == 1);
    CHECK(binom_mod(10, 5, 5, 2) == 252 % 25);
    CHECK(binom_mod(23, 16, 7, 2) == 245157 % 49);
    // Pascal rows agree with big-integer reductions
    auto row = binom_row_mod(30, 343);
    for (u64 n = 0; n <= 30; ++n) CHECK(row[n] == big_binomial(30, n).mod_small(343));
}

TEST_CASE("digit sums and minimality") {
    CHECK(sigma_digits(125, 5) == 1);
    CHECK(is_minimal(125, 5));
    CHECK(sigma_digits(23, 7) == 5); // 23 = 32_7
    CHECK(is_minimal(23, 7));
    CHECK(sigma_digits(46, 5) == 6); // 46 = 141_5
    CHECK_FALSE(is_minimal(46, 5));
}

TEST_CASE("teichmuller fixed points") {
    CHECK(teichmuller(0, 5, 3) == 0);
    CHECK(teichmuller(1, 5, 3) == 1);
    CHECK(teichmuller(2, 5, 2) == 7); // 7^5 = 7 mod 25
    for (u32 p : {5u, 7u, 11u})
        for (u32 K : {1u, 2u, 4u, 6u})
            for (u32 lam = 0; lam < p; ++lam) {
                u64 t = teichmuller(lam, p, K);
                u64 m = pow_u64(p, K);
                CHECK(powmod(t, p, m) == t);
                CHECK(t % p == lam);
            }
}

TEST_CASE("binomial sums: closed vs direct") {
    CHECK(closed_binomial_sum(11, 3, 0, 5).v == 0);
    CHECK(closed_binomial_sum(11, 3, 1, 5).v == 2); // a - r = -8 = 2 mod 5
    CHECK(closed_binomial_sum(11, 3, 2, 5).v == 3);
    CHECK(direct_binomial_sum(11, 3, 1, 5).v == 2); // C(11,2)+C(11,6) = 517
    CHECK(direct_binomial_sum(11, 3, 2, 5).v == 3); // C(11,1)+C(11,5) = 473
    for (u32 p : {5u, 7u}) {
        for (u64 r = 1; r <= 160; ++r)
            for (u32 i = 0; i <= 2; ++i)
                for (u32 a = 1 + i; a <= p - 1 + i; ++a) {
                    if (r % (p - 1) != a % (p - 1) || r < a) continue;
                    CHECK(closed_binomial_sum(r, a, i, p) == direct_binomial_sum(r, a, i, p));
                }
    }
}

TEST_CASE("remark identity, tested empirically for i <= 4") {
    // the general form C(a,i) - C(r,i) is stated without proof; observe it
    for (u32 p : {5u, 7u}) {
        for (u64 r = 1; r <= 120; ++r)
            for (u32 i = 0; i <= 4; ++i)
                for (u32 a = 1 + i; a <= p - 1 + i; ++a) {
                    if (r % (p - 1) != a % (p - 1) || r < a) continue;
                    CHECK(direct_binomial_sum(r, a, i, p) == remark_binomial_sum(r, a, i, p));
                }
    }
}

TEST_CASE("refined sum mod p^3") {
    CHECK(refined_sum_p3(5, 5) == 0); // empty sum at r = p
    CHECK(refined_sum_p3(105, 5) == (5 + 125 - 105 % 125) % 125);
    CHECK(refined_sum_p3(505, 5) == 0); // (5 - 505) = 0 mod 125
    CHECK_THROWS_AS(refined_sum_p3(9, 5), domain_error);
    for (u32 p : {5u, 7u}) {
        u64 p2 = static_cast<u64>(p) * p, p3 = p2 * p;
        for (u64 r = p; r <= 700; ++r) {
            if (r % (p - 1) != 1 % (p - 1)) continue;
            if ((r - p) % p2 != 0) continue;
            u64 expect = static_cast<u64>(((static_cast<i64>(p) - static_cast<i64>(r)) %
                                               static_cast<i64>(p3) + static_cast<i64>(p3)) %
                                          static_cast<i64>(p3));
            CHECK(refined_sum_p3(r, p) == expect);
        }
    }
}

TEST_CASE("correction coefficients: trivial regimes") {
    // r <= ap puts every binomial in the set 0 mod p
    auto sc = correction_coefficients(CorrectionVariant::alpha, 15, 3, 5);
    CHECK(sc.trivial);
    CHECK(sc.entries.empty());
    // beta/gamma trivial only when the index set is empty (r = a)
    auto sb = correction_coefficients(CorrectionVariant::beta, 6, 6, 5);
    CHECK(sb.trivial);
}

static void check_sums(const SparseCorrection& sc, u32 nmax, u32 target, u64 rhs3 = 0) {
    const u32 p = sc.p;
    for (u32 n = 0; n <= nmax; ++n) {
        u64 pm = pow_u64(p, target > n ? target - n : 1);
        u64 s = 0;
        for (auto [j, e] : sc.entries) {
            u64 b = 1;
            for (u32 i = 1; i <= n; ++i) { b *= j - n + i; b /= i; }
            s = (s + mulmod(b % sc.modulus, e, sc.modulus)) % sc.modulus;
        }
        u64 want = (n == 3) ? rhs3 % pm : 0;
        CHECK(s % pm == want);
    }
}

TEST_CASE("correction coefficients: alpha at (r=300, a=6, p=7)") {
    auto sc = correction_coefficients(CorrectionVariant::alpha, 300, 6, 7);
    CHECK_FALSE(sc.trivial);
    check_sums(sc, 3, 4);
    for (auto [j, e] : sc.entries) CHECK(e % 7 == binom_mod(300, j, 7, 1));
}

TEST_CASE("correction coefficients: alpha a=3 exception") {
    // r = 3 mod p-1, large enough to be non-trivial
    u32 p = 5;
    u64 r = 83; // 83 = 3 mod 4, r > 3p
    auto sc = correction_coefficients(CorrectionVariant::alpha, r, 3, p);
    CHECK_FALSE(sc.trivial);
    check_sums(sc, 3, 4, binom_mod(r, 3, p, 1));
}

TEST_CASE("correction coefficients: gamma_p1 and gamma_p2 at (r=105, p=5)") {
    for (auto variant : {CorrectionVariant::gamma_p1, CorrectionVariant::gamma_p2}) {
        auto sc = correction_coefficients(variant, 105, 5, 5);
        CHECK_FALSE(sc.trivial);
        for (auto [j, e] : sc.entries) {
            u64 diff = (e + sc.modulus - binom_mod(105, j, 5, 2) % sc.modulus) % sc.modulus;
            CHECK(diff % 25 == 0);
        }
        check_sums(sc, 4, 5);
    }
}

TEST_CASE("correction coefficients: gamma_p3 at (r=505, p=5)") {
    auto sc = correction_coefficients(CorrectionVariant::gamma_p3, 505, 5, 5);
    CHECK_FALSE(sc.trivial);
    const u64 p2 = 25;
    for (auto [j, e] : sc.entries) {
        u64 diff = (e + sc.modulus - binom_mod(505, j, 5, 3) % sc.modulus) % sc.modulus;
        CHECK(diff % (p2 * 5) == 0);
    }
    check_sums(sc, 4, 6);
}

TEST_CASE("correction coefficients: strengthened alpha (mod p^2)") {
    // r = a mod p(p-1) supports the lifted system
    u32 p = 7;
    u64 r = 48; // 48 = 6 mod 42
    auto sc = correction_coefficients(CorrectionVariant::alpha, r, 6, p, 1);
    CHECK_FALSE(sc.trivial);
    check_sums(sc, 3, 5);
    for (auto [j, e] : sc.entries) {
        u64 diff = (e + sc.modulus - binom_mod(r, j, p, 2) % sc.modulus) % sc.modulus;
        CHECK(diff % 49 == 0);
    }
}
