#pragma once

#include "padicrep/module.hpp"

namespace padicrep {

// The window representative of r mod p-1 inside [lo, lo + p - 2].
u32 residue_window(u64 r, u32 p, u32 lo);

// One singular layer V_r^{*(k-1)} / V_r^{*k} together with its two factors
// and a projection onto the quotient factor J1. For k = 3 the projection is
// pinned by theta^2 X^{r-2p-a+2} Y^{a-4} -> X^{p-a+3}; the other layers use a
// deterministic but unpinned scale.
struct StarLayer {
    u32 p = 0;
    u64 r = 0;
    u32 k = 0;
    u32 a = 0; // window representative for this layer
    IrredLabel j0, j1;
    PolyQuotientModel layer;
    RowBasis j0_part;                        // J0-isotypic submodule, model coords
    std::vector<std::vector<u32>> proj_j1;   // (a_{J1}+1) x dim(layer)

    // image in V_{j1.a} of the class of f (requires f in V^{*(k-1)})
    HomPoly project(const HomPoly& f) const;
};

StarLayer star_layer(u32 p, u64 r, u32 k);

// The map of the analog-8.5 lemma: theta^2-division followed by the monomial
// rules, realised as the normalised J1-projection of the k = 3 layer.
HomPoly project_analog85(const StarLayer& layer3, const HomPoly& f);

// Everything around Q = V_r / (X_{r-2} + V_r^{***}).
struct QBundle {
    u32 p = 0;
    u64 r = 0;
    u32 a = 0; // representative in [3, p+1]
    Subspace xr0, xr1, xr2;   // the X_{r-i} chain
    Subspace v1, v2, v3;      // the V_r^{*k}
    PolyQuotientModel Q;      // V_r / (X_{r-2} + V***)
    PolyQuotientModel W;      // V*  / (X_{r-2}^* + V***)
    PolyQuotientModel U;      // V_r / (X_{r-2} + V*)
    JHMultiset jhQ, jhW, jhU;
};

QBundle build_q_bundle(u32 p, u64 r);

} // namespace padicrep
