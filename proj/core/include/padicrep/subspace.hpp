#pragma once

#include "padicrep/poly.hpp"

#include <string>
#include <vector>

namespace padicrep {

enum class MonoidChoice { Gamma, M };

// Subspace of V_r kept in strict reduced row echelon form, so equal subspaces
// compare equal as row matrices.
class Subspace {
  public:
    Subspace() = default;
    Subspace(u32 p, u64 r) : p_(p), r_(r) { require_prime_ge5(p); }
    static Subspace zero(u32 p, u64 r) { return Subspace(p, r); }
    static Subspace full(u32 p, u64 r);
    static Subspace span(u32 p, u64 r, const std::vector<HomPoly>& gens);

    u32 p() const { return p_; }
    u64 r() const { return r_; }
    u64 ambient_dim() const { return r_ + 1; }
    u64 dim() const { return rows_.size(); }
    const std::vector<std::vector<u32>>& rows() const { return rows_; }
    HomPoly row_poly(u64 i) const;

    // true if the row was new (dimension grew)
    bool insert(const std::vector<u32>& row);
    bool insert(const HomPoly& f) { check(f); return insert(f.coeffs); }

    bool contains(const HomPoly& f) const;
    bool contains(const Subspace& other) const;
    // coordinates of f in the row basis; nullopt if not contained
    std::optional<std::vector<u32>> coords(const HomPoly& f) const;
    std::vector<u32> reduce(std::vector<u32> v) const; // residual after elimination

    friend bool operator==(const Subspace&, const Subspace&) = default;

    std::string dump_json() const; // row-major digit matrix

  private:
    void check(const HomPoly& f) const;
    u32 p_ = 0;
    u64 r_ = 0;
    std::vector<std::vector<u32>> rows_; // strict RREF, pivots ascending
    std::vector<u64> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum_spaces(const Subspace& a, const Subspace& b);

// Nested pair W <= U modelling the quotient U / W.
struct Subquotient {
    Subspace upper;
    Subspace lower;
    Subquotient(Subspace U, Subspace W);
    u64 dim() const { return upper.dim() - lower.dim(); }
};

// Generator matrices: Gamma = two shears and diag(g, 1) for the least
// primitive root g; the monoid M adds the rank-one idempotent.
std::vector<Mat2> monoid_generators(u32 p, MonoidChoice which);

// Smallest subspace containing the generators and closed under the chosen
// monoid's action: apply-and-reduce until the dimension stabilises twice.
Subspace orbit_span(const std::vector<HomPoly>& generators, MonoidChoice which);

// X_{r-i}: the F_p[Gamma]-submodule of V_r generated by X^i Y^{r-i}.
Subspace x_submodule(u32 p, u64 r, u32 i);

// theta^k V_{r-k(p+1)} as a subspace of V_r.
Subspace vr_star(u32 p, u64 r, u32 k);

// {w in W : act(n, w) = 0 for every singular n}; plain enumeration of N.
Subspace singular_kernel(const Subspace& W);

struct StarFiltration {
    Subspace star1, star2, star3; // W cap V_r^{*k}
};
StarFiltration star_filtration(const Subspace& W);

} // namespace padicrep
