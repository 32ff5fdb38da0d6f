#pragma once

#include "padicrep/binom.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace padicrep {

enum class CorrectionVariant { alpha, beta, gamma, gamma_p1, gamma_p2, gamma_p3 };

std::string to_string(CorrectionVariant v);

// One linear condition sum_j C(j, n) * entry_j = rhs (mod p^pow).
struct CorrectionConstraint {
    u32 n = 0;
    u32 pow = 1;
    u64 rhs = 0; // residue mod p^pow
};

// Low-level description of a correction system: entries indexed by
// j = cls (mod p-1), j_lo <= j < j_hi, of the form C(base_row, j) + p^lift * delta_j,
// with delta supported on a few pivots chosen to satisfy the solved constraints.
struct CorrectionBuild {
    u32 p = 0;
    u64 base_row = 0;
    u32 cls = 0;
    u64 j_lo = 0, j_hi = 0;
    u32 lift = 1;
    std::vector<CorrectionConstraint> solved;   // enforced via the pivot solve
    std::vector<CorrectionConstraint> verified; // must hold automatically
    std::optional<u64> pivot_hint;              // first pivot, when the proof names one
};

struct SparseCorrection {
    CorrectionVariant variant = CorrectionVariant::alpha;
    u32 p = 0;
    u64 r = 0;
    u32 a = 0;
    CorrectionBuild build;
    u64 modulus = 0;              // residues are stored mod this power of p
    std::map<u64, u64> entries;   // empty in the trivial regime (all zero)
    bool trivial = false;

    std::vector<u64> index_set() const;
    u64 at(u64 j) const; // entry residue; 0 in the trivial regime
};

// Solve a correction system and re-check every constraint. Throws
// internal_error if the pivot selection or any congruence fails.
SparseCorrection solve_correction(const CorrectionBuild& build);

// The six named systems. extra_lift raises the lift exponent (and every
// solved target) when the surrounding congruences support it.
SparseCorrection correction_coefficients(CorrectionVariant variant, u64 r, u32 a, u32 p,
                                         u32 extra_lift = 0);

} // namespace padicrep
