#pragma once

#include "padicrep/bigint.hpp"
#include "padicrep/fp.hpp"

#include <vector>

namespace padicrep {

// C(r, n) mod p by digitwise products of digit binomials.
FpScalar lucas_binom(u64 r, u64 n, u32 p);

// Exact binomial reduced mod p^K (K p-digits). Exact big-integer evaluation.
u64 binom_mod(u64 r, u64 n, u32 p, u32 K);

// p^K as u64; throws if it would overflow.
u64 pow_u64(u64 p, u32 K);

// Full Pascal row (C(r, 0..r) mod m) built by row iteration; additions only,
// so the residues are exact.
std::vector<u64> binom_row_mod(u64 r, u64 m);

// Incremental Pascal-row walker mod m, for sweeps over consecutive r.
class PascalRow {
  public:
    explicit PascalRow(u64 m) : m_(m), row_{1 % m} {}
    u64 r() const { return static_cast<u64>(row_.size()) - 1; }
    const std::vector<u64>& row() const { return row_; }
    void step();            // advance r by one
    void step_to(u64 r);    // advance to the given r (monotone)
  private:
    u64 m_;
    std::vector<u64> row_;
};

u32 sigma_digits(u64 r, u32 p);
bool is_minimal(u64 r, u32 p);

// Teichmuller representative of lambda mod p^K: the fixed point of x -> x^p.
u64 teichmuller(u32 lambda, u32 p, u32 K);

// Sum over j = a-i mod p-1, 0 < j < r-i of C(r, j) mod p: closed forms of the
// three low cases, the literal sum, and the conjectural general form.
FpScalar closed_binomial_sum(u64 r, u32 a, u32 i, u32 p);
FpScalar direct_binomial_sum(u64 r, u32 a, u32 i, u32 p);
FpScalar remark_binomial_sum(u64 r, u32 a, u32 i, u32 p); // C(a,i) - C(r,i) mod p

// Sum over j = 1 mod p-1, 1 < j < r of C(r, j), exactly mod p^3.
// Requires r = 1 mod p-1 and p^2 | p - r.
u64 refined_sum_p3(u64 r, u32 p);

} // namespace padicrep
