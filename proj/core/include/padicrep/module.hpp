#pragma once

#include "padicrep/subspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace padicrep {

// Row-reduced basis of a subspace of F_p^n; the coordinate-space sibling of
// Subspace for module models.
class RowBasis {
  public:
    RowBasis() = default;
    RowBasis(u32 p, u64 n) : p_(p), n_(n) {}
    u32 p() const { return p_; }
    u64 n() const { return n_; }
    u64 dim() const { return rows_.size(); }
    const std::vector<std::vector<u32>>& rows() const { return rows_; }
    const std::vector<u64>& pivots() const { return pivots_; }

    bool insert(std::vector<u32> v);
    std::vector<u32> reduce(std::vector<u32> v) const;
    bool contains(const std::vector<u32>& v) const;
    std::optional<std::vector<u32>> coords(const std::vector<u32>& v) const;

  private:
    u32 p_ = 0;
    u64 n_ = 0;
    std::vector<std::vector<u32>> rows_;
    std::vector<u64> pivots_;
};

// (a, b) naming the irreducible V_a x D^b.
struct IrredLabel {
    u32 a = 0;
    u32 b = 0;
    friend auto operator<=>(const IrredLabel&, const IrredLabel&) = default;
};

struct JHMultiset {
    std::map<IrredLabel, u32> mult;

    u32 count(IrredLabel l) const;
    u64 total_dim() const; // sum mult * (a+1)
    u64 factors() const;   // sum of multiplicities
    void add(IrredLabel l, u32 m = 1);
    bool remove_one(IrredLabel l); // false if absent
    JHMultiset merged(const JHMultiset& o) const;
    bool submultiset_of(const JHMultiset& o) const;
    std::string str() const; // sorted "(a,b):mult" list
    friend bool operator==(const JHMultiset&, const JHMultiset&) = default;
};

// Finite-dimensional Gamma-module given by the matrices of the three standard
// generators on a chosen basis (columns act on coordinate columns).
struct ModuleModel {
    u32 p = 0;
    u64 dim = 0;
    std::vector<std::vector<std::vector<u32>>> gen; // 3 matrices dim x dim
    std::string provenance;

    std::vector<u32> apply(u32 gen_index, const std::vector<u32>& v) const;
    std::vector<u32> apply(const std::vector<std::vector<u32>>& mat,
                           const std::vector<u32>& v) const;
    // scalar of the central element diag(g,g); throws if not scalar
    u32 central_scalar() const;
    std::vector<std::vector<u32>> matrix_of_word(const std::vector<i64>& word) const;
};

ModuleModel irred_model(IrredLabel label, u32 p);
ModuleModel tensor_model(const ModuleModel& A, const ModuleModel& B, const std::string& name);
// Sym^n F_p^2 with the substitution action, as a model (n may exceed p-1).
ModuleModel sym_power_model(u32 p, u64 n, const std::string& name);

ModuleModel submodule_model(const ModuleModel& M, const RowBasis& S, const std::string& name);
ModuleModel quotient_model(const ModuleModel& M, const RowBasis& S, const std::string& name);

// All intertwiners S -> M as dim_M x dim_S matrices.
std::vector<std::vector<std::vector<u32>>> hom_space(const ModuleModel& S, const ModuleModel& M);

struct SocleResult {
    RowBasis submodule;  // in M's coordinates
    JHMultiset layer;
};
SocleResult socle(const ModuleModel& M);
JHMultiset jh_multiset(const ModuleModel& M);
std::vector<JHMultiset> socle_series(const ModuleModel& M);

bool is_split_extension(const ModuleModel& M, IrredLabel bottom, IrredLabel top);

RowBasis gamma_span(const ModuleModel& M, const std::vector<u32>& v);
bool factor_hit(const std::vector<u32>& v, const ModuleModel& M, IrredLabel label);
bool generates_whole(const std::vector<u32>& v, const ModuleModel& M);
JHMultiset span_factors(const ModuleModel& M, const std::vector<std::vector<u32>>& vectors);

// Model of a subquotient U/W of V_r together with the map from polynomials
// to model coordinates.
struct PolyQuotientModel {
    ModuleModel model;
    Subspace upper, lower;
    Subspace reps; // RREF coset representatives; row i is basis vector i
    std::vector<u32> class_coords(const HomPoly& f) const;
    HomPoly representative(const std::vector<u32>& coords) const;
};
PolyQuotientModel poly_quotient_model(const Subspace& U, const Subspace& W,
                                      const std::string& name);

} // namespace padicrep
