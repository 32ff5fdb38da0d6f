#pragma once

#include "padicrep/labels.hpp"
#include "padicrep/qstruct.hpp"
#include "padicrep/report.hpp"
#include "padicrep/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace padicrep {

// One displayed function f = f_0 + f_1 (+ f_2) of an elimination proposition,
// with the bookkeeping check_elimination needs.
struct ElimFunction {
    std::string name;
    TreeFn f;
    bool counted = true; // participates in the span-elimination bookkeeping
};

struct ElimCheck {
    std::string prop;
    u32 p = 0;
    u64 r = 0;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
    JHMultiset eliminated;         // factors of Q spanned by the reductions
    JHMultiset survivors;          // jh(Q) minus eliminated
    std::optional<u64> survivor_class; // common ind-exponent class, when single
    bool needs_separation = false;     // survivor is V_{p-2} x D^m
    std::vector<std::string> skipped_functions;
};

// The section-5 propositions.
std::vector<std::string> elim_prop_ids();
bool elim_prop_applies(const std::string& prop, u32 p, u64 r);

// Transcribed function(s) for one proposition at (p, r); throws domain_error
// if the hypotheses fail.
std::vector<ElimFunction> build_elim_function(const std::string& prop, u32 p, u64 r,
                                              const SlopeParam& slope);

// Integrality of (T - a_p) f, reduction membership, and the factor image
// checks, per proposition.
ElimCheck check_elimination(const std::string& prop, u32 p, u64 r, const SlopeParam& slope);
ElimCheck check_elimination(const std::string& prop, u32 p, u64 r, const SlopeParam& slope,
                            const QBundle& q);

// Section-6 separation: irreducible via the T-bar identity, reducible via
// (T-bar^2 + 1).
struct SeparationResult {
    CheckStatus status = CheckStatus::skipped;
    bool reducible = false;
    u32 unit_c = 0; // the reported unit scalar
    std::string detail;
};
SeparationResult check_reducibility_split(u32 p, u64 r, const SlopeParam& slope);

// End-to-end comparison against the main-theorem dictionary.
struct TableCompare {
    CheckStatus status = CheckStatus::skipped;
    TheoremLabel predicted;
    TheoremLabel computed;
    std::string detail;
};
TableCompare theorem_table_compare(u32 p, u64 r, const SlopeParam& slope);

} // namespace padicrep
