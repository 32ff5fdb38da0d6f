#include "padicrep/qstruct.hpp"

namespace padicrep {

u32 residue_window(u64 r, u32 p, u32 lo) {
    u32 pm1 = p - 1;
    u32 rr = static_cast<u32>(r % pm1);
    return lo + (rr + pm1 - lo % pm1) % pm1;
}

StarLayer star_layer(u32 p, u64 r, u32 k) {
    if (k < 1 || k > 3) throw domain_error("star_layer: k must be 1, 2 or 3");
    StarLayer L;
    L.p = p;
    L.r = r;
    L.k = k;
    const u32 lo = 2 * k - 1;
    L.a = residue_window(r, p, lo);
    const u64 rmin = (k == 1) ? p : (k == 2) ? 2 * static_cast<u64>(p) + 1 : 3 * static_cast<u64>(p) + 2;
    if (r < rmin) throw domain_error("star_layer: r too small for this layer");
    const u32 pm1 = p - 1;
    switch (k) {
        case 1:
            L.j0 = {L.a, 0};
            L.j1 = {p - L.a - 1, L.a % pm1};
            break;
        case 2:
            L.j0 = {L.a - 2, 1};
            L.j1 = {p - L.a + 1, (L.a - 1) % pm1};
            break;
        default:
            L.j0 = {L.a - 4, 2};
            L.j1 = {p - L.a + 3, (L.a - 2) % pm1};
            break;
    }
    Subspace upper = vr_star(p, r, k - 1);
    Subspace lower = vr_star(p, r, k);
    L.layer = poly_quotient_model(upper, lower, "V^*" + std::to_string(k - 1) + "/V^*" + std::to_string(k));
    if (L.layer.model.dim != L.j0.a + 1 + L.j1.a + 1)
        throw internal_error("star_layer: unexpected layer dimension");

    // J0-isotypic part of the socle
    auto homs0 = hom_space(irred_model(L.j0, p), L.layer.model);
    L.j0_part = RowBasis(p, L.layer.model.dim);
    for (const auto& phi : homs0)
        for (u64 j = 0; j < phi[0].size(); ++j) {
            std::vector<u32> col(L.layer.model.dim);
            for (u64 i = 0; i < L.layer.model.dim; ++i) col[i] = phi[i][j];
            L.j0_part.insert(std::move(col));
        }
    if (L.j0_part.dim() != L.j0.a + 1)
        throw internal_error("star_layer: J0 does not occur once in the socle");

    ModuleModel quot = quotient_model(L.layer.model, L.j0_part, "layer/J0");
    auto homs1 = hom_space(quot, irred_model(L.j1, p));
    if (homs1.size() != 1)
        throw internal_error("star_layer: layer/J0 is not the expected irreducible");

    // assemble the composed projection layer -> irred(j1)
    std::vector<u64> free_cols;
    for (u64 c = 0; c < L.layer.model.dim; ++c)
        if (!std::binary_search(L.j0_part.pivots().begin(), L.j0_part.pivots().end(), c))
            free_cols.push_back(c);
    const auto& phi = homs1.front(); // (j1.a+1) x quot.dim
    std::vector<std::vector<u32>> proj(L.j1.a + 1, std::vector<u32>(L.layer.model.dim, 0));
    for (u64 col = 0; col < L.layer.model.dim; ++col) {
        std::vector<u32> e(L.layer.model.dim, 0);
        e[col] = 1;
        auto red = L.j0_part.reduce(e);
        for (u64 i = 0; i <= L.j1.a; ++i) {
            u64 s = 0;
            for (u64 qj = 0; qj < free_cols.size(); ++qj)
                s += static_cast<u64>(phi[i][qj]) * red[free_cols[qj]];
            proj[i][col] = static_cast<u32>(s % p);
        }
    }
    L.proj_j1 = std::move(proj);

    // normalisation
    auto image_of = [&](const HomPoly& f) {
        auto c = L.layer.class_coords(f);
        HomPoly out(p, L.j1.a);
        for (u64 i = 0; i <= L.j1.a; ++i) {
            u64 s = 0;
            for (u64 j = 0; j < c.size(); ++j) s += static_cast<u64>(L.proj_j1[i][j]) * c[j];
            out.coeffs[i] = static_cast<u32>(s % p);
        }
        return out;
    };
    u32 scale = 0;
    u64 target_index = 0;
    if (k == 3) {
        // theta^2 X^{r-2p-a+2} Y^{a-4}  ->  X^{p-a+3}
        HomPoly pin = theta_mul(theta_mul(HomPoly::monomial(p, r - 2 * (static_cast<u64>(p) + 1), L.a - 4)));
        HomPoly img = image_of(pin);
        scale = img.coeffs[0];
        target_index = 0;
        if (scale == 0) throw internal_error("star_layer: k=3 pin has zero image");
        for (u64 i = 1; i <= L.j1.a; ++i)
            if (img.coeffs[i] != 0) throw internal_error("star_layer: k=3 pin image not a monomial");
    } else if (k == 2) {
        // theta X^{r-2p} Y^{p-1}  ->  Y^{p-a+1}
        HomPoly pin = theta_mul(HomPoly::monomial(p, r - (static_cast<u64>(p) + 1), p - 1));
        HomPoly img = image_of(pin);
        scale = img.coeffs[L.j1.a];
        target_index = L.j1.a;
        if (scale == 0) throw internal_error("star_layer: k=2 pin has zero image");
        for (u64 i = 0; i < L.j1.a; ++i)
            if (img.coeffs[i] != 0) throw internal_error("star_layer: k=2 pin image not a monomial");
    } else {
        // deterministic scale: first nonzero entry of the matrix becomes 1
        for (u64 i = 0; i <= L.j1.a && !scale; ++i)
            for (u64 j = 0; j < L.layer.model.dim && !scale; ++j) scale = L.proj_j1[i][j];
        if (!scale) throw internal_error("star_layer: zero projection");
        (void)target_index;
    }
    u64 fix = powmod(scale, p - 2, p);
    for (auto& rowv : L.proj_j1)
        for (auto& c : rowv) c = static_cast<u32>(c * fix % p);
    return L;
}

HomPoly StarLayer::project(const HomPoly& f) const {
    auto c = layer.class_coords(f);
    HomPoly out(p, j1.a);
    for (u64 i = 0; i <= j1.a; ++i) {
        u64 s = 0;
        for (u64 j = 0; j < c.size(); ++j) s += static_cast<u64>(proj_j1[i][j]) * c[j];
        out.coeffs[i] = static_cast<u32>(s % p);
    }
    return out;
}

HomPoly project_analog85(const StarLayer& layer3, const HomPoly& f) {
    if (layer3.k != 3) throw domain_error("project_analog85: needs the k=3 layer");
    if (layer3.a < 5 || layer3.a > layer3.p + 3)
        throw domain_error("project_analog85: a out of range");
    return layer3.project(f);
}

QBundle build_q_bundle(u32 p, u64 r) {
    if (r < 3 * static_cast<u64>(p) + 2) throw domain_error("build_q_bundle: need r >= 3p+2");
    QBundle b;
    b.p = p;
    b.r = r;
    b.a = residue_window(r, p, 3);
    b.xr0 = x_submodule(p, r, 0);
    b.xr1 = x_submodule(p, r, 1);
    b.xr2 = x_submodule(p, r, 2);
    b.v1 = vr_star(p, r, 1);
    b.v2 = vr_star(p, r, 2);
    b.v3 = vr_star(p, r, 3);

    Subspace vr = Subspace::full(p, r);
    Subspace qlower = sum_spaces(b.xr2, b.v3);
    b.Q = poly_quotient_model(vr, qlower, "Q");

    Subspace xstar = intersect(b.xr2, b.v1);
    Subspace wlower = sum_spaces(xstar, b.v3);
    b.W = poly_quotient_model(b.v1, wlower, "W");

    Subspace ulower = sum_spaces(b.xr2, b.v1);
    b.U = poly_quotient_model(vr, ulower, "U");

    b.jhQ = jh_multiset(b.Q.model);
    b.jhW = jh_multiset(b.W.model);
    b.jhU = jh_multiset(b.U.model);
    if (!(b.jhW.merged(b.jhU) == b.jhQ))
        throw internal_error("build_q_bundle: W and U factors do not assemble to Q");
    return b;
}

} // namespace padicrep
