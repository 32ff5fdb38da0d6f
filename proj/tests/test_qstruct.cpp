#include <doctest.h>

#include "padicrep/qstruct.hpp"

using namespace padicrep;

TEST_CASE("residue windows") {
    CHECK(residue_window(23, 5, 3) == 3);   // 23 = 3 mod 4
    CHECK(residue_window(12, 5, 1) == 4);   // 12 = 0 mod 4 -> a = 4 in [1,4]
    CHECK(residue_window(12, 5, 3) == 4);
    CHECK(residue_window(14, 5, 3) == 6);   // 14 = 2 mod 4 -> p+1
    CHECK(residue_window(300, 7, 3) == 6);
    CHECK(residue_window(105, 5, 3) == 5);  // a = p
}

TEST_CASE("poly quotient models: V_r / V_r^* structure") {
    u32 p = 5;
    {
        // split case a = p-1: r = 12
        u64 r = 12;
        auto q = poly_quotient_model(Subspace::full(p, r), vr_star(p, r, 1), "VrModVr*");
        JHMultiset jh = jh_multiset(q.model);
        JHMultiset expect;
        u32 a = residue_window(r, p, 1);
        expect.add({a, 0});
        expect.add({p - a - 1, a % (p - 1)});
        CHECK(jh == expect);
        CHECK(is_split_extension(q.model, {a, 0}, {p - a - 1, a % (p - 1)}));
    }
    {
        // non-split case a = 1: r = 9
        u64 r = 9;
        auto q = poly_quotient_model(Subspace::full(p, r), vr_star(p, r, 1), "VrModVr*");
        u32 a = residue_window(r, p, 1);
        CHECK_FALSE(is_split_extension(q.model, {a, 0}, {p - a - 1, a % (p - 1)}));
    }
}

TEST_CASE("star layers carry the stated two factors") {
    for (u32 p : {5u, 7u}) {
        for (u64 r = 3 * static_cast<u64>(p) + 2; r <= 3 * static_cast<u64>(p) + 2 + (p - 2); ++r) {
            for (u32 k : {1u, 2u, 3u}) {
                StarLayer L = star_layer(p, r, k);
                JHMultiset jh = jh_multiset(L.layer.model);
                JHMultiset expect;
                expect.add(L.j0);
                expect.add(L.j1);
                CHECK(jh == expect);
            }
        }
    }
}

TEST_CASE("layer split exactly at a = p-1, p+1, p+3") {
    for (u32 p : {5u, 7u}) {
        for (u64 r = 3 * static_cast<u64>(p) + 2; r <= 3 * static_cast<u64>(p) + 2 + (p - 2); ++r) {
            for (u32 k : {1u, 2u, 3u}) {
                StarLayer L = star_layer(p, r, k);
                bool split = is_split_extension(L.layer.model, L.j0, L.j1);
                CHECK(split == (L.a == p - 3 + 2 * k));
            }
        }
    }
}

TEST_CASE("project_analog85 monomial rules") {
    for (u32 p : {5u, 7u}) {
        for (u64 r = 3 * static_cast<u64>(p) + 2; r <= 4 * static_cast<u64>(p); ++r) {
            StarLayer L = star_layer(p, r, 3);
            if (L.a < 5 || L.a > p + 3) continue;
            u64 a = L.a;
            auto theta2 = [&](u64 ydeg) {
                return theta_mul(theta_mul(HomPoly::monomial(p, r - 2 * (static_cast<u64>(p) + 1), ydeg)));
            };
            // pinned rule
            HomPoly img1 = project_analog85(L, theta2(a - 4));
            CHECK(img1 == HomPoly::monomial(p, p - a + 3, 0));
            // companion rule; the intrinsic relative sign is (-1)^a
            HomPoly img2 = project_analog85(L, theta2(p - 1));
            i64 sign = (a % 2 == 0) ? 1 : -1;
            CHECK(img2 == HomPoly::monomial(p, p - a + 3, p - a + 3, sign));
            CHECK(project_analog85(L, theta2(0)).is_zero());
            CHECK(project_analog85(L, theta2(r - 2 * (static_cast<u64>(p) + 1))).is_zero());
        }
    }
}

TEST_CASE("project_analog85 kernel codimension") {
    u32 p = 7;
    u64 r = 30;
    StarLayer L = star_layer(p, r, 3);
    // rank of the projection on V^{**}/V^{***} is dim J1 = p-a+4
    RowBasis image(p, L.j1.a + 1);
    Subspace v2 = vr_star(p, r, 2);
    for (u64 i = 0; i < v2.dim(); ++i) {
        HomPoly f = v2.row_poly(i);
        image.insert(L.project(f).coeffs);
    }
    CHECK(image.dim() == L.j1.a + 1);
    CHECK(L.j1.a + 1 == p - L.a + 4);
}

TEST_CASE("Q bundle at the spec instance (p=5, r=23)") {
    QBundle b = build_q_bundle(5, 23);
    CHECK(b.a == 3);
    JHMultiset expect;
    expect.add({1, 3}); // V_{p-4} x D^3 = V_1 x D^3
    CHECK(b.jhQ == expect);
    CHECK(b.jhW.factors() == 0);
    CHECK(b.Q.model.dim == 2);
}

TEST_CASE("Q bundle dimension bookkeeping") {
    for (u32 p : {5u}) {
        for (u64 r = 3 * static_cast<u64>(p) + 2; r <= 3 * static_cast<u64>(p) + 10; ++r) {
            QBundle b = build_q_bundle(p, r);
            CHECK(b.jhQ.total_dim() == b.Q.model.dim);
            CHECK(b.jhW.total_dim() == b.W.model.dim);
            CHECK(b.jhU.total_dim() == b.U.model.dim);
        }
    }
}
