#pragma once

#include "padicrep/module.hpp"
#include "padicrep/tree.hpp"

#include <string>

namespace padicrep {

// Normalised exponent class mod p^2-1 under k ~ pk (the two conjugate
// fundamental-character powers give isomorphic inductions).
u64 normalize_ind_exponent(i64 k, u32 p);

// Surviving factor V_n x D^m  ->  exponent class of ind(w2^{n+1+m(p+1)}).
u64 label_to_ind_exponent(u32 n, u32 m, u32 p);

struct TheoremLabel {
    enum class Kind { irreducible_ind, reducible_pair, out_of_scope };
    Kind kind = Kind::out_of_scope;
    u64 exponent_class = 0; // for irreducible_ind
    std::string text;

    static TheoremLabel ind(i64 exponent, u32 p);
    static TheoremLabel reducible(u32 p);
    static TheoremLabel open_case(const std::string& why);
    friend bool operator==(const TheoremLabel&, const TheoremLabel&) = default;
};

// The main-theorem dictionary: table row for (a, congruence class of r).
// Returns out_of_scope for the unaddressed cases (and whenever the slope
// hypothesis "v(a_p)=5/2 implies v(a_p^2-p^5)=5" fails).
TheoremLabel predicted_reduction(u32 p, u64 r, const SlopeParam& slope);

} // namespace padicrep
