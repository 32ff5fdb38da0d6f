#pragma once

#include "padicrep/piadic.hpp"
#include "padicrep/poly.hpp"

#include <map>
#include <vector>

namespace padicrep {

// Coset vertex g^0_{n,mu} with mu = [l_0] + [l_1] p + ... + [l_{n-1}] p^{n-1},
// or the level-(-1) sink alpha = (1 0; 0 p).
struct VertexId {
    bool alpha = false;
    std::vector<u32> digits; // length n, entries in [0, p)

    static VertexId g0(std::vector<u32> digits) { return VertexId{false, std::move(digits)}; }
    static VertexId id() { return VertexId{false, {}}; }
    static VertexId sink() { return VertexId{true, {}}; }
    u32 level() const { return static_cast<u32>(digits.size()); }
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
    std::string str() const;
};

// Finite-support function from tree vertices to degree-r coefficient vectors
// over the truncated ramified ring.
class TreeFn {
  public:
    TreeFn() = default;
    TreeFn(PiRing ring, u64 r) : ring_(ring), r_(r) {}

    const PiRing& ring() const { return ring_; }
    u64 r() const { return r_; }
    const std::map<VertexId, std::vector<PiLaurent>>& support() const { return values_; }

    std::vector<PiLaurent>& at(const VertexId& v);             // creates zero value
    const std::vector<PiLaurent>* find(const VertexId& v) const;
    void add_term(const VertexId& v, u64 ydeg, const PiLaurent& c);
    void prune(); // drop vertices that are exactly zero

    TreeFn& operator+=(const TreeFn& o);
    TreeFn& operator-=(const TreeFn& o);
    friend TreeFn operator+(TreeFn a, const TreeFn& b) { return a += b; }
    friend TreeFn operator-(TreeFn a, const TreeFn& b) { return a -= b; }
    TreeFn scaled(const PiLaurent& c) const;

    // every coefficient has pi-valuation >= 0 (throws precision_error when
    // undecidable); on failure reports the offending vertex and index
    struct IntegralityWitness {
        bool ok = true;
        VertexId vertex;
        u64 index = 0;
        std::string detail;
    };
    IntegralityWitness integrality() const;

    // residue TreeFn over F_p (requires integrality)
    std::map<VertexId, HomPoly> reduce_mod_pi() const;

  private:
    PiRing ring_;
    u64 r_ = 0;
    std::map<VertexId, std::vector<PiLaurent>> values_;
};

// Hecke operator T = T^+ + T^- on g^0-supported functions; alpha may appear
// in outputs only.
TreeFn t_plus(const TreeFn& f);
TreeFn t_minus(const TreeFn& f);
TreeFn t_apply(const TreeFn& f);

// Mod-p specialisation of the same formulas at weight n <= p-1; p-power
// factors vanish and a det twist rides along unchanged.
std::map<VertexId, HomPoly> t_bar_apply(const std::map<VertexId, HomPoly>& f, u32 p);

// Eigenvalue parameter: a_p = unit * pi^{pi_power} in a ramification-e ring.
struct SlopeParam {
    PiRing ring;
    PiLaurent a_p;

    SlopeParam() = default;
    SlopeParam(PiRing rg, i64 pi_power, i64 unit = 1);
    // slope as an exact rational (num, den)
    std::pair<i64, i64> slope() const;
    void require_open_interval() const; // 2 < v(a_p) < 3
    bool is_half_five() const;          // v(a_p) = 5/2 exactly
    bool ap2_minus_p5_has_val5() const; // v(a_p^2 - p^5) = 5
};

} // namespace padicrep
