#include "padicrep/theorems.hpp"

#include "padicrep/corrections.hpp"
#include "padicrep/elim.hpp"
#include "padicrep/qstruct.hpp"

#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace padicrep {

SlopeParam default_slope(u32 p, u32 prec) {
    PiRing ring{p, 2, prec};
    return SlopeParam(ring, 5);
}

namespace {

ModuleModel subspace_model(const Subspace& S, const std::string& name) {
    ModuleModel M;
    M.p = S.p();
    M.dim = S.dim();
    M.provenance = name;
    for (const auto& g : monoid_generators(S.p(), MonoidChoice::Gamma)) {
        std::vector<std::vector<u32>> mat(M.dim, std::vector<u32>(M.dim, 0));
        for (u64 j = 0; j < M.dim; ++j) {
            auto c = S.coords(act(g, S.row_poly(j)));
            if (!c) throw domain_error(name + ": subspace is not Gamma-invariant");
            for (u64 i = 0; i < M.dim; ++i) mat[i][j] = (*c)[i];
        }
        M.gen.push_back(std::move(mat));
    }
    return M;
}

JHMultiset jh_of_subspace(const Subspace& S, const std::string& name) {
    if (S.dim() == 0) return {};
    return jh_multiset(subspace_model(S, name));
}

JHMultiset jh_of_quotient(const Subspace& U, const Subspace& W, const std::string& name) {
    if (U.dim() == W.dim()) return {};
    return jh_multiset(poly_quotient_model(U, W, name).model);
}

IrredLabel lab(u32 p, i64 a, i64 b) {
    u64 pm1 = p - 1;
    return IrredLabel{static_cast<u32>(a),
                      static_cast<u32>(((b % static_cast<i64>(pm1)) + pm1) % pm1)};
}

CheckReport pass(const std::string& id, u32 p, u64 r, const std::string& w = "") {
    return CheckReport{id, p, r, CheckStatus::pass, w};
}
CheckReport fail(const std::string& id, u32 p, u64 r, const std::string& w) {
    return CheckReport{id, p, r, CheckStatus::fail, w};
}

CheckReport guard(const std::string& id, u32 p, u64 r, const std::function<CheckReport()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return fail(id, p, r, std::string("exception: ") + e.what());
    }
}

bool eq_report(CheckReport& rep, const JHMultiset& got, const JHMultiset& want,
               const std::string& what) {
    if (got == want) return true;
    rep.status = CheckStatus::fail;
    rep.witness += what + ": got [" + got.str() + "] want [" + want.str() + "]; ";
    return false;
}

bool full_dim_nodiv(u32 p, u64 r) {
    return r >= 3 * (u64)p + 2 && r % p != 0 && (r - 1) % p != 0 && sigma_digits(r - 2, p) >= p;
}
bool full_dim_pdivr(u32 p, u64 r) {
    if (r < 3 * (u64)p + 2 || r % p != 0) return false;
    u64 u = r;
    while (u % p == 0) u /= p;
    return sigma_digits(u, p) >= p;
}
bool full_dim_pdivrp(u32 p, u64 r) {
    if (r < 3 * (u64)p + 2 || (r - 1) % p != 0) return false;
    u64 u = r - 1;
    while (u % p == 0) u /= p;
    return sigma_digits(u, p) >= p;
}

// r = p^n + r0 with r0 in [lo, hi], n > 0
bool is_pn_plus(u32 p, u64 r, u64 lo, u64 hi) {
    for (u64 q = p; q < r; ) {
        if (r - q >= lo && r - q <= hi) return true;
        if (q > r / p) break;
        q *= p;
    }
    return false;
}

// U_l layers inside V_{(k+1)p-1}, in this artifact's indexing (socle first):
// sigma = top = V_{p-l-1} x D^l, middle = (V_{l-2} x D) + V_l, U_0 = V_{p-1}
void add_ul_layers(u32 p, u32 l, u32 twist, std::vector<JHMultiset>& layers) {
    if (l == 0) {
        layers[0].add(lab(p, p - 1, twist));
        return;
    }
    layers[0].add(lab(p, p - l - 1, l + twist));
    if (l >= 2) layers[1].add(lab(p, l - 2, 1 + twist));
    layers[1].add(lab(p, l, twist));
    layers[2].add(lab(p, p - l - 1, l + twist));
}

// dims of X_{r-2}^{*k} for k = 0..3 plus the quotient multisets on demand
struct X2Stars {
    Subspace x2, s1, s2, s3;
};
X2Stars x2_stars(u32 p, u64 r) {
    X2Stars o;
    o.x2 = x_submodule(p, r, 2);
    StarFiltration sf = star_filtration(o.x2);
    o.s1 = sf.star1;
    o.s2 = sf.star2;
    o.s3 = sf.star3;
    return o;
}

} // namespace

const TheoremRegistry& TheoremRegistry::instance() {
    static TheoremRegistry reg;
    return reg;
}

void TheoremRegistry::add(CheckId c) {
    order_.push_back(c.id);
    checks_.emplace(c.id, std::move(c));
}

std::vector<std::string> TheoremRegistry::ids() const { return order_; }

bool TheoremRegistry::has(const std::string& id) const { return checks_.count(id) > 0; }

const CheckId& TheoremRegistry::get(const std::string& id) const {
    auto it = checks_.find(id);
    if (it == checks_.end()) throw domain_error("unknown check id: " + id);
    return it->second;
}

CheckReport TheoremRegistry::verify(const std::string& id, u32 p, u64 r) const {
    const CheckId& c = get(id);
    require_prime_ge5(p);
    if (!c.applies(p, r))
        return CheckReport{id, p, r, CheckStatus::skipped, "precondition: " + c.hypothesis};
    return guard(id, p, r, [&] { return c.run(p, r); });
}

std::vector<CheckReport> TheoremRegistry::sweep(const std::string& id, u32 p, u64 r_lo, u64 r_hi,
                                                u32 jobs) const {
    if (r_hi < r_lo) return {};
    std::vector<CheckReport> out(r_hi - r_lo + 1);
    if (jobs <= 1) {
        for (u64 r = r_lo; r <= r_hi; ++r) out[r - r_lo] = verify(id, p, r);
        return out;
    }
    std::atomic<u64> next{r_lo};
    std::vector<std::thread> pool;
    for (u32 t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                u64 r = next.fetch_add(1);
                if (r > r_hi) return;
                out[r - r_lo] = verify(id, p, r);
            }
        });
    for (auto& th : pool) th.join();
    return out;
}

const std::vector<std::string>& TheoremRegistry::manifest() {
    static const std::vector<std::string> m{
        "lem:Lucas", "lem:binomialsumaeq2", "lem:analog27bg", "lem:analog7ag", "lem:analog7bg",
        "lem:analog7cg", "lem:analog7dg", "lem:JHTensor", "lem:VrAstQuotients",
        "lem:VrAstQuotients-split", "lem:VrAstCriteria",
        "lem:XrInXr1InXr2", "lem:Xr2V2xXrpp", "lem:Xr2Generators", "prop:Xrm012ModAst",
        "lem:JHXr", "lem:analog47", "prop:JHXrppxV2", "prop:XrAst0IffSrMin",
        "lem:Xr2FullDimGeneralPNotDivRpR", "lem:Xr2FullDimGeneralPDivR",
        "lem:Xr2FullDimGeneralPDivRp", "lem:Xr2SrMinrEqPn", "prop:dimXr-2min",
        "prop:V3p-1IsoXr-2",
        "lem:Xr2r4p-1AstModAstAstEqualModP", "lem:Xr-2AstModXr-2AstAstUnequalModP",
        "lem:Xr-2AstModXr-2AstAstUnequalModPaEqualP1", "lem:phi3", "lem:aEq3VrAst",
        "lem:Xr-2AstAstModXr-2AstAstAstUnequalModP",
        "lem:Xr-2AstAstModXr-2AstAstAstUnequalModPaEqualp1", "lem:Xr2aeqp+1",
        "lem:aEq3VrAstAstnot012", "lem:aEq3VrAstAst", "lem:Xr2r3AstAstModAstAstAstEqualModP",
        "lem:Xr-2AstAstModXr-2AstAstAstUnequalModPaEqual4",
        "lem:Xr2r4AstAstModAstAstAstEqualMod2", "lem:Xr2r4AstAstModAstAstAstEqualModP",
        "prop:QrEq3", "prop:QrEq4", "prop:QrEqp", "prop:QrEqp+1", "prop:QrEqA", "prop:Qrnota",
        "prop:QrEqA-1",
        "prop:elimrEqA", "prop:elimrEqAp", "prop:elimaeqp", "prop:elimrnEqAa-1",
        "prop:elimrEqA-1", "prop:elimrEqA-1p2", "prop:elimaeq3", "prop:elimrEq4",
        "prop:elimaeqp+1",
        "thm:sepAeq3", "thm:sepAeq5", "thm:sepAeqP", "thm:main-table"};
    return m;
}

TheoremRegistry::TheoremRegistry() {
    register_groundwork();
    register_section3();
    register_section4();
    register_qprops();
    register_hecke_backed();
}

void TheoremRegistry::register_groundwork() {
    add({"lem:Lucas", "none", [](u32, u64) { return true; },
         [](u32 p, u64 r) {
             auto row = binom_row_mod(r, p);
             for (u64 n = 0; n <= r; ++n)
                 if (lucas_binom(r, n, p).v != row[n])
                     return fail("lem:Lucas", p, r, "mismatch at n=" + std::to_string(n));
             return pass("lem:Lucas", p, r);
         }});

    add({"lem:binomialsumaeq2", "r >= 1", [](u32, u64 r) { return r >= 1; },
         [](u32 p, u64 r) {
             for (u32 i = 0; i <= 2; ++i)
                 for (u32 a = 1 + i; a <= p - 1 + i; ++a) {
                     if (r % (p - 1) != a % (p - 1) || r < a) continue;
                     if (!(closed_binomial_sum(r, a, i, p) == direct_binomial_sum(r, a, i, p)))
                         return fail("lem:binomialsumaeq2", p, r,
                                     "a=" + std::to_string(a) + " i=" + std::to_string(i));
                 }
             return pass("lem:binomialsumaeq2", p, r);
         }});

    add({"lem:analog27bg", "r = 1 mod p-1 and p^2 | p-r",
         [](u32 p, u64 r) {
             return r >= p && r % (p - 1) == 1 % (p - 1) && (r - p) % ((u64)p * p) == 0;
         },
         [](u32 p, u64 r) {
             u64 p3 = pow_u64(p, 3);
             u64 want = static_cast<u64>((((i64)p - (i64)r) % (i64)p3 + (i64)p3) % (i64)p3);
             u64 got = refined_sum_p3(r, p);
             if (got != want)
                 return fail("lem:analog27bg", p, r,
                             "sum=" + std::to_string(got) + " want=" + std::to_string(want));
             return pass("lem:analog27bg", p, r);
         }});

    add({"lem:analog7ag", "r >= 3 (window a in [3, p+1])", [](u32, u64 r) { return r >= 3; },
         [](u32 p, u64 r) {
             u32 a = residue_window(r, p, 3);
             auto sc = correction_coefficients(CorrectionVariant::alpha, r, a, p);
             return pass("lem:analog7ag", p, r,
                         sc.trivial ? "trivial" : std::to_string(sc.entries.size()) + " entries");
         }});

    add({"lem:analog7bg", "a in [4, p+1], r = a mod p-1 and mod p",
         [](u32 p, u64 r) {
             if (r < 4) return false;
             u32 a = residue_window(r, p, 4);
             return a <= p + 1 && r >= a && r % p == a % p;
         },
         [](u32 p, u64 r) {
             u32 a = residue_window(r, p, 4);
             auto sc = correction_coefficients(CorrectionVariant::beta, r, a, p);
             return pass("lem:analog7bg", p, r,
                         sc.trivial ? "trivial" : std::to_string(sc.entries.size()) + " entries");
         }});

    add({"lem:analog7cg", "a in [4, p+1], r = a mod p-1 and mod p",
         [](u32 p, u64 r) {
             if (r < 4) return false;
             u32 a = residue_window(r, p, 4);
             return a <= p + 1 && r >= a && r % p == a % p;
         },
         [](u32 p, u64 r) {
             u32 a = residue_window(r, p, 4);
             auto sc = correction_coefficients(CorrectionVariant::gamma, r, a, p);
             return pass("lem:analog7cg", p, r,
                         sc.trivial ? "trivial" : std::to_string(sc.entries.size()) + " entries");
         }});

    add({"lem:analog7dg", "a = p, p^2 | p-r",
         [](u32 p, u64 r) {
             return r > p && r % (p - 1) == 1 % (p - 1) && (r - p) % ((u64)p * p) == 0;
         },
         [](u32 p, u64 r) {
             auto s1 = correction_coefficients(CorrectionVariant::gamma_p1, r, p, p);
             auto s2 = correction_coefficients(CorrectionVariant::gamma_p2, r, p, p);
             std::string w = "(i):" + std::to_string(s1.entries.size()) +
                             " (ii):" + std::to_string(s2.entries.size());
             if ((r - p) % pow_u64(p, 3) == 0) {
                 auto s3 = correction_coefficients(CorrectionVariant::gamma_p3, r, p, p);
                 w += " (iii):" + std::to_string(s3.entries.size());
             }
             return pass("lem:analog7dg", p, r, w);
         }});

    add({"lem:JHTensor", "r read as m+n <= 2p-2",
         [](u32 p, u64 r) { return r <= 2 * (u64)(p - 1); },
         [](u32 p, u64 r) {
             CheckReport rep = pass("lem:JHTensor", p, r);
             for (u32 m = 0; m <= p - 1; ++m) {
                 if (r < m || r - m > p - 1 || r - m < m) continue;
                 u32 n = static_cast<u32>(r - m);
                 ModuleModel t =
                     tensor_model(irred_model({m, 0}, p), irred_model({n, 0}, p), "VmxVn");
                 JHMultiset got = jh_multiset(t);
                 JHMultiset want;
                 if (m + n <= p - 1) {
                     for (u32 i = 0; i <= m; ++i) want.add(lab(p, m + n - 2 * i, i));
                     if (!eq_report(rep, got, want, "(i) m=" + std::to_string(m))) continue;
                     eq_report(rep, socle(t).layer, want, "(i) socle m=" + std::to_string(m));
                 } else {
                     u32 k = m + n + 2 - p - 1; // the V_{(k+1)p-1} summand
                     std::vector<JHMultiset> ulayers(3);
                     for (u32 mm = 0; 2 * mm <= k; ++mm) add_ul_layers(p, k - 2 * mm, mm, ulayers);
                     JHMultiset wantsum;
                     for (auto& L : ulayers) wantsum = wantsum.merged(L);
                     for (u32 i = 0; i <= p - n - 2; ++i)
                         wantsum.add(lab(p, (p - m - 2) + (p - n - 2) - 2 * i, m + n + 2 - p + i));
                     if (!eq_report(rep, got, wantsum, "(ii) m=" + std::to_string(m))) continue;
                     ModuleModel big = sym_power_model(p, (u64)(k + 1) * p - 1, "V(k+1)p-1");
                     auto layers = socle_series(big);
                     std::vector<JHMultiset> nonempty;
                     for (auto& L : ulayers)
                         if (L.factors()) nonempty.push_back(L);
                     if (layers.size() != nonempty.size()) {
                         rep.status = CheckStatus::fail;
                         rep.witness += "(ii) U-layer count m=" + std::to_string(m) + "; ";
                         continue;
                     }
                     for (size_t i = 0; i < layers.size(); ++i)
                         eq_report(rep, layers[i], nonempty[i], "(ii) U-layer " + std::to_string(i));
                 }
             }
             return rep;
         }});

    add({"lem:VrAstQuotients", "r >= p", [](u32 p, u64 r) { return r >= p; },
         [](u32 p, u64 r) {
             CheckReport rep = pass("lem:VrAstQuotients", p, r);
             for (u32 k = 1; k <= 3; ++k) {
                 u64 rmin = (k == 1) ? p : (k == 2) ? 2 * (u64)p + 1 : 3 * (u64)p + 2;
                 if (r < rmin) continue;
                 StarLayer L = star_layer(p, r, k);
                 JHMultiset want;
                 want.add(L.j0);
                 want.add(L.j1);
                 eq_report(rep, jh_multiset(L.layer.model), want, "layer k=" + std::to_string(k));
                 if (socle(L.layer.model).layer.count(L.j0) != 1) {
                     rep.status = CheckStatus::fail;
                     rep.witness += "k=" + std::to_string(k) + ": J0 missing from socle; ";
                 }
             }
             return rep;
         }});

    add({"lem:VrAstQuotients-split", "r >= p", [](u32 p, u64 r) { return r >= p; },
         [](u32 p, u64 r) {
             CheckReport rep = pass("lem:VrAstQuotients-split", p, r);
             for (u32 k = 1; k <= 3; ++k) {
                 u64 rmin = (k == 1) ? p : (k == 2) ? 2 * (u64)p + 1 : 3 * (u64)p + 2;
                 if (r < rmin) continue;
                 StarLayer L = star_layer(p, r, k);
                 bool split = is_split_extension(L.layer.model, L.j0, L.j1);
                 bool expect = (L.a == p - 3 + 2 * k); // p-1, p+1, p+3
                 if (split != expect) {
                     rep.status = CheckStatus::fail;
                     rep.witness += "k=" + std::to_string(k) + " split=" + std::to_string(split) +
                                    " a=" + std::to_string(L.a) + "; ";
                 }
             }
             return rep;
         }});

    add({"lem:VrAstCriteria", "r >= 3(p+1)", [](u32 p, u64 r) { return r >= 3 * (u64)(p + 1); },
         [](u32 p, u64 r) {
             std::mt19937 rng(static_cast<u32>(r * 31 + p));
             for (int t = 0; t < 40; ++t) {
                 u64 cls = rng() % (p - 1);
                 HomPoly f(p, r);
                 for (u64 j = cls ? cls : p - 1; j <= r; j += p - 1)
                     if (rng() % 3 == 0) f.coeffs[j] = rng() % p;
                 if (cls == 0 && rng() % 3 == 0) f.coeffs[0] = rng() % p;
                 for (u32 k = 1; k <= 3; ++k)
                     if (singular_criterion(f, k) != theta_power_divides(f, k))
                         return fail("lem:VrAstCriteria", p, r,
                                     "k=" + std::to_string(k) + " poly " + render_poly(f));
             }
             return pass("lem:VrAstCriteria", p, r);
         }});
}

void TheoremRegistry::register_section3() {
    add({"lem:XrInXr1InXr2", "r >= 2", [](u32, u64 r) { return r >= 2; },
         [](u32 p, u64 r) {
             Subspace x0 = x_submodule(p, r, 0);
             Subspace x1 = x_submodule(p, r, 1);
             Subspace x2 = x_submodule(p, r, 2);
             if (!x1.contains(x0) || !x2.contains(x1))
                 return fail("lem:XrInXr1InXr2", p, r, "inclusion failure");
             bool eq01 = x0.dim() == x1.dim();
             if (eq01 != (r <= p))
                 return fail("lem:XrInXr1InXr2", p, r, "X_r = X_{r-1} iff r <= p violated");
             bool eq12 = x1.dim() == x2.dim();
             bool expect12 = r <= p || is_pn_plus(p, r, 2, p - 1);
             if (eq12 != expect12)
                 return fail("lem:XrInXr1InXr2", p, r,
                             "X_{r-1} = X_{r-2} condition violated (dims " +
                                 std::to_string(x1.dim()) + "," + std::to_string(x2.dim()) + ")");
             return pass("lem:XrInXr1InXr2", p, r);
         }});

    add({"lem:Xr2V2xXrpp", "r >= 2", [](u32, u64 r) { return r >= 2; },
         [](u32 p, u64 r) {
             Subspace x2 = x_submodule(p, r, 2);
             if (x2.dim() > 3 * (u64)p + 3)
                 return fail("lem:Xr2V2xXrpp", p, r, "dim bound violated");
             Subspace xpp = x_submodule(p, r - 2, 0);
             Subspace image(p, r);
             for (u64 i = 0; i < xpp.dim(); ++i)
                 for (u64 j = 0; j <= 2; ++j)
                     image.insert(xpp.row_poly(i) * HomPoly::monomial(p, 2, j));
             if (!(image == x2))
                 return fail("lem:Xr2V2xXrpp", p, r, "multiplication image is not X_{r-2}");
             return pass("lem:Xr2V2xXrpp", p, r, "dim=" + std::to_string(x2.dim()));
         }});

    add({"lem:Xr2Generators", "r >= 2", [](u32, u64 r) { return r >= 2; },
         [](u32 p, u64 r) {
             Subspace x2 = x_submodule(p, r, 2);
             Subspace expl(p, r);
             expl.insert(HomPoly::monomial(p, r, 0));
             expl.insert(HomPoly::monomial(p, r, r));
             expl.insert(HomPoly::monomial(p, r, 1));
             HomPoly X2 = HomPoly::monomial(p, 2, 0), Y2 = HomPoly::monomial(p, 2, 2),
                     XY = HomPoly::monomial(p, 2, 1);
             for (u32 k = 0; k < p; ++k) {
                 HomPoly a = act(Mat2(p, k, 0, 1, 1), HomPoly::monomial(p, r - 2, 0));
                 HomPoly b = act(Mat2(p, 1, 0, k, 1), HomPoly::monomial(p, r - 2, 0));
                 expl.insert(X2 * a);
                 expl.insert(XY * a);
                 expl.insert(Y2 * b);
             }
             if (!(expl == x2))
                 return fail("lem:Xr2Generators", p, r, "explicit set does not span X_{r-2}");
             return pass("lem:Xr2Generators", p, r);
         }});

    add({"prop:Xrm012ModAst", "r > 2", [](u32, u64 r) { return r > 2; },
         [](u32 p, u64 r) {
             CheckReport rep = pass("prop:Xrm012ModAst", p, r);
             for (u32 i = 0; i <= 2; ++i) {
                 u32 a = residue_window(r, p, 1 + i);
                 if (r < a) continue;
                 Subspace xr = x_submodule(p, r, i);
                 Subspace xs = intersect(xr, vr_star(p, r, 1));
                 JHMultiset got = jh_of_quotient(xr, xs, "X/X*");
                 Subspace xa = x_submodule(p, a, i);
                 Subspace xas = intersect(xa, vr_star(p, a, 1));
                 JHMultiset want = jh_of_quotient(xa, xas, "Xa/Xa*");
                 eq_report(rep, got, want, "i=" + std::to_string(i));
             }
             return rep;
         }});

    add({"lem:JHXr", "r >= p", [](u32 p, u64 r) { return r >= p; },
         [](u32 p, u64 r) {
             u32 a = residue_window(r, p, 1);
             Subspace xr = x_submodule(p, r, 0);
             Subspace xs = intersect(xr, vr_star(p, r, 1));
             CheckReport rep = pass("lem:JHXr", p, r);
             JHMultiset wantq;
             wantq.add(lab(p, a, 0));
             eq_report(rep, jh_of_quotient(xr, xs, "Xr/Xr*"), wantq, "X_r/X_r^*");
             if ((xr.dim() == (u64)p + 1) != (xs.dim() > 0))
                 return fail("lem:JHXr", p, r, "dim X_r = p+1 iff X_r^* != 0 violated");
             if (xs.dim() > 0) {
                 JHMultiset wants;
                 wants.add(lab(p, p - a - 1, a));
                 eq_report(rep, jh_of_subspace(xs, "Xr*"), wants, "X_r^*");
             }
             return rep;
         }});

    add({"lem:analog47", "r >= p", [](u32 p, u64 r) { return r >= p; },
         [](u32 p, u64 r) {
             u32 a = residue_window(r, p, 1);
             StarFiltration sf = star_filtration(x_submodule(p, r, 0));
             bool s12 = sf.star1.dim() == sf.star2.dim();
             bool s23 = sf.star2.dim() == sf.star3.dim();
             bool w12 = (a == 1) ? (r % p == 0) : true;
             bool w23 = (a == 2) ? (r % p == 0 || r % p == 1) : true;
             if (s12 != w12 || s23 != w23)
                 return fail("lem:analog47", p, r,
                             "a=" + std::to_string(a) + " got (" + std::to_string(s12) + "," +
                                 std::to_string(s23) + ")");
             return pass("lem:analog47", p, r);
         }});

    add({"prop:JHXrppxV2", "r >= p+1", [](u32 p, u64 r) { return r >= (u64)p + 1; },
         [](u32 p, u64 r) {
             u32 a = residue_window(r, p, 3);
             CheckReport rep = pass("prop:JHXrppxV2", p, r);
             Subspace xpp = x_submodule(p, r - 2, 0);
             Subspace xpps = intersect(xpp, vr_star(p, r - 2, 1));
             ModuleModel xm = subspace_model(xpp, "Xr''");
             ModuleModel tens = tensor_model(xm, irred_model({2, 0}, p), "Xr''xV2");
             RowBasis sub(p, tens.dim);
             for (u64 i = 0; i < xpps.dim(); ++i) {
                 auto c = xpp.coords(xpps.row_poly(i));
                 for (u64 j = 0; j < 3; ++j) {
                     std::vector<u32> v(tens.dim, 0);
                     for (u64 k = 0; k < xm.dim; ++k) v[k * 3 + j] = (*c)[k];
                     sub.insert(std::move(v));
                 }
             }
             JHMultiset got_sub =
                 sub.dim() ? jh_multiset(submodule_model(tens, sub, "X''*xV2")) : JHMultiset{};
             JHMultiset got_quot = jh_multiset(quotient_model(tens, sub, "quot"));
             JHMultiset want_sub, want_quot;
             bool star_nonzero = xpps.dim() > 0;
             if (a == 3) {
                 if (star_nonzero) {
                     want_sub.add(lab(p, p - 2, 2), 2);
                     want_sub.add(lab(p, 1, 1));
                     want_sub.add(lab(p, p - 4, 3));
                 }
                 want_quot.add(lab(p, 1, 1));
                 want_quot.add(lab(p, 3, 0));
             } else if (a <= p - 1) {
                 if (star_nonzero) {
                     want_sub.add(lab(p, p - a + 3, a - 2));
                     want_sub.add(lab(p, p - a + 1, a - 1));
                     want_sub.add(lab(p, p - a - 1, a));
                 }
                 if (a >= 4) want_quot.add(lab(p, a - 4, 2));
                 want_quot.add(lab(p, a - 2, 1));
                 want_quot.add(lab(p, a, 0));
             } else if (a == p) {
                 if (star_nonzero) {
                     want_sub.add(lab(p, 3, p - 2));
                     want_sub.add(lab(p, 1, 0));
                 }
                 want_quot.add(lab(p, p - 4, 2));
                 want_quot.add(lab(p, p - 2, 1), 2);
                 want_quot.add(lab(p, 1, 0));
             } else { // a = p+1
                 if (star_nonzero) want_sub.add(lab(p, 2, 0));
                 want_quot.add(lab(p, p - 1, 1));
                 want_quot.add(lab(p, p - 3, 2), 2);
                 want_quot.add(lab(p, 0, 1));
                 want_quot.add(lab(p, 2, 0));
             }
             eq_report(rep, got_sub, want_sub, "sub");
             eq_report(rep, got_quot, want_quot, "quot");
             return rep;
         }});

    add({"prop:XrAst0IffSrMin", "r >= p", [](u32 p, u64 r) { return r >= p; },
         [](u32 p, u64 r) {
             Subspace xr = x_submodule(p, r, 0);
             Subspace xs = intersect(xr, vr_star(p, r, 1));
             if ((xs.dim() == 0) != is_minimal(r, p))
                 return fail("prop:XrAst0IffSrMin", p, r,
                             "X_r^* dim=" + std::to_string(xs.dim()) +
                                 " sigma=" + std::to_string(sigma_digits(r, p)));
             return pass("prop:XrAst0IffSrMin", p, r);
         }});

    auto full_dim = [this](const char* id, bool (*hyp)(u32, u64)) {
        add({id, "dim X_{r-2} = 3p+3 hypothesis", hyp, [id](u32 p, u64 r) {
                 u64 d = x_submodule(p, r, 2).dim();
                 if (d != 3 * (u64)p + 3) return fail(id, p, r, "dim=" + std::to_string(d));
                 return pass(id, p, r);
             }});
    };
    full_dim("lem:Xr2FullDimGeneralPNotDivRpR", full_dim_nodiv);
    full_dim("lem:Xr2FullDimGeneralPDivR", full_dim_pdivr);
    full_dim("lem:Xr2FullDimGeneralPDivRp", full_dim_pdivrp);

    add({"lem:Xr2SrMinrEqPn", "r = p^n, n > 1",
         [](u32 p, u64 r) {
             if (r <= p) return false;
             u64 q = (u64)p * p;
             while (q < r && q <= r / p) q *= p;
             return q == r;
         },
         [](u32 p, u64 r) {
             u64 d = x_submodule(p, r, 2).dim();
             if (d != 2 * (u64)p + 4)
                 return fail("lem:Xr2SrMinrEqPn", p, r, "dim=" + std::to_string(d));
             return pass("lem:Xr2SrMinrEqPn", p, r);
         }});

    add({"prop:dimXr-2min", "window a in [4, p-1], sigma(r-2) minimal, r >= p",
         [](u32 p, u64 r) {
             if (r < p) return false;
             u32 a = residue_window(r, p, 3);
             return a >= 4 && a <= p - 1 && is_minimal(r - 2, p);
         },
         [](u32 p, u64 r) {
             u32 a = residue_window(r, p, 3);
             JHMultiset got = jh_of_subspace(x_submodule(p, r, 2), "Xr-2");
             JHMultiset want;
             want.add(lab(p, a, 0));
             want.add(lab(p, a - 2, 1));
             if (!is_pn_plus(p, r, a - 1, a - 1)) want.add(lab(p, a - 4, 2));
             CheckReport rep = pass("prop:dimXr-2min", p, r);
             eq_report(rep, got, want, "X_{r-2}");
             return rep;
         }});

    add({"prop:V3p-1IsoXr-2", "window a = p+1, sigma(r-2) minimal, r >= p",
         [](u32 p, u64 r) {
             return r >= p && residue_window(r, p, 3) == p + 1 && is_minimal(r - 2, p);
         },
         [](u32 p, u64 r) {
             JHMultiset got = jh_of_subspace(x_submodule(p, r, 2), "Xr-2");
             JHMultiset want = jh_multiset(sym_power_model(p, 3 * (u64)p - 1, "V3p-1"));
             CheckReport rep = pass("prop:V3p-1IsoXr-2", p, r);
             eq_report(rep, got, want, "X_{r-2} vs V_{3p-1}");
             return rep;
         }});
}

void TheoremRegistry::register_section4() {
    // a-window [3, p+1] via r mod p-1; conditions additionally constrain r mod p
    auto win = [](u32 p, u64 r) { return residue_window(r, p, 3); };

    add({"lem:Xr2r4p-1AstModAstAstEqualModP", "a in [4, p], r = a mod p, r > p",
         [win](u32 p, u64 r) {
             u32 a = win(p, r);
             return r > p && a >= 4 && a <= p && r % p == a % p;
         },
         [win](u32 p, u64 r) {
             u32 a = win(p, r);
             X2Stars x = x2_stars(p, r);
             bool ok = (a == 4) ? x.s1.dim() == x.s2.dim() : x.s1.dim() == x.s3.dim();
             if (!ok)
                 return fail("lem:Xr2r4p-1AstModAstAstEqualModP", p, r,
                             "dims " + std::to_string(x.s1.dim()) + "," +
                                 std::to_string(x.s2.dim()) + "," + std::to_string(x.s3.dim()));
             return pass("lem:Xr2r4p-1AstModAstAstEqualModP", p, r);
         }});

    add({"lem:Xr-2AstModXr-2AstAstUnequalModP", "a in [4, p], r != a mod p, r >= 2p+1",
         [win](u32 p, u64 r) {
             u32 a = win(p, r);
             return r >= 2 * (u64)p + 1 && a >= 4 && a <= p && r % p != a % p;
         },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             if (x.s1.dim() == x.s2.dim())
                 return fail("lem:Xr-2AstModXr-2AstAstUnequalModP", p, r, "X*/X** = 0");
             return pass("lem:Xr-2AstModXr-2AstAstUnequalModP", p, r);
         }});

    add({"lem:Xr-2AstModXr-2AstAstUnequalModPaEqualP1", "a = p+1, r >= 2p+1",
         [win](u32 p, u64 r) { return r >= 2 * (u64)p + 1 && win(p, r) == p + 1; },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             JHMultiset got = jh_of_quotient(x.s1, x.s2, "X*/X**");
             JHMultiset want;
             if (r % p == 0) want.add(lab(p, p - 1, 1));
             else if (r % p == 1) want.add(lab(p, 0, 1));
             else {
                 want.add(lab(p, p - 1, 1));
                 want.add(lab(p, 0, 1));
             }
             CheckReport rep = pass("lem:Xr-2AstModXr-2AstAstUnequalModPaEqualP1", p, r);
             eq_report(rep, got, want, "X*/X**");
             return rep;
         }});

    add({"lem:phi3", "a = 3 branch: r = 3 mod p-1, r != 2 mod p, r >= 3p+2",
         [](u32 p, u64 r) {
             return r >= 3 * (u64)p + 2 && r % (p - 1) == 3 % (p - 1) && r % p != 2;
         },
         [](u32 p, u64 r) {
             // phi(X''^* x V_2) not inside X_{r-2}^{**}: the witness polynomial
             // F x X^2 with F = sum_k (kX + Y)^{r''}
             u64 rpp = r - 2;
             HomPoly F(p, rpp);
             for (u32 k = 0; k < p; ++k) F += act(Mat2(p, k, 0, 1, 1), HomPoly::monomial(p, rpp, 0));
             HomPoly g = F * HomPoly::monomial(p, 2, 0);
             Subspace xpp = x_submodule(p, rpp, 0);
             Subspace xpps = intersect(xpp, vr_star(p, rpp, 1));
             if (!xpps.contains(F))
                 return fail("lem:phi3", p, r, "witness not in X''^*");
             if (!singular_criterion(g, 1) || singular_criterion(g, 2))
                 return fail("lem:phi3", p, r, "image not in V* minus V**");
             return pass("lem:phi3", p, r);
         }});

    add({"lem:aEq3VrAst", "r = 3 mod p-1, r >= 2p+1",
         [](u32 p, u64 r) { return r >= 2 * (u64)p + 1 && r % (p - 1) == 3 % (p - 1); },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             JHMultiset got = jh_of_quotient(x.s1, x.s2, "X*/X**");
             JHMultiset want;
             if (r % p == 1 || r % p == 2) want.add(lab(p, 1, 1));
             else {
                 want.add(lab(p, 1, 1));
                 want.add(lab(p, p - 2, 2));
             }
             CheckReport rep = pass("lem:aEq3VrAst", p, r);
             eq_report(rep, got, want, "X*/X**");
             return rep;
         }});

    add({"lem:Xr-2AstAstModXr-2AstAstAstUnequalModP", "a in [5, p], r != a, a-1 mod p, r >= 3p+2",
         [win](u32 p, u64 r) {
             u32 a = win(p, r);
             return r >= 3 * (u64)p + 2 && a >= 5 && a <= p && r % p != a % p &&
                    r % p != (a - 1) % p;
         },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             if (x.s2.dim() == x.s3.dim())
                 return fail("lem:Xr-2AstAstModXr-2AstAstAstUnequalModP", p, r, "X**/X*** = 0");
             return pass("lem:Xr-2AstAstModXr-2AstAstAstUnequalModP", p, r);
         }});

    add({"lem:Xr-2AstAstModXr-2AstAstAstUnequalModPaEqualp1", "a = p+1, r != 0,1 mod p, r >= 3p+2",
         [win](u32 p, u64 r) {
             return r >= 3 * (u64)p + 2 && win(p, r) == p + 1 && r % p != 0 && r % p != 1;
         },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             if (x.s2.dim() == x.s3.dim())
                 return fail("lem:Xr-2AstAstModXr-2AstAstAstUnequalModPaEqualp1", p, r,
                             "X**/X*** = 0");
             return pass("lem:Xr-2AstAstModXr-2AstAstAstUnequalModPaEqualp1", p, r);
         }});

    add({"lem:Xr2aeqp+1", "a = p+1, r = 0,1 mod p, r >= 3p+2",
         [win](u32 p, u64 r) {
             return r >= 3 * (u64)p + 2 && win(p, r) == p + 1 && (r % p == 0 || r % p == 1);
         },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             if (x.s2.dim() != x.s3.dim())
                 return fail("lem:Xr2aeqp+1", p, r, "X**/X*** != 0");
             return pass("lem:Xr2aeqp+1", p, r);
         }});

    add({"lem:aEq3VrAstAstnot012", "r = p+2 mod p-1, r != 0,1,2 mod p, r >= 3p+2",
         [](u32 p, u64 r) {
             return r >= 3 * (u64)p + 2 && r % (p - 1) == 3 % (p - 1) && r % p != 0 &&
                    r % p != 1 && r % p != 2;
         },
         [](u32 p, u64 r) {
             // X**/X*** carries both factors of V**/V*** (a' = p+2)
             X2Stars x = x2_stars(p, r);
             JHMultiset got = jh_of_quotient(x.s2, x.s3, "X**/X***");
             JHMultiset want;
             want.add(lab(p, p - 2, 2)); // V_{a'-4} x D^2
             want.add(lab(p, 1, p));     // V_{p-a'+3} x D^{a'-2}
             CheckReport rep = pass("lem:aEq3VrAstAstnot012", p, r);
             eq_report(rep, got, want, "X**/X***");
             return rep;
         }});

    add({"lem:aEq3VrAstAst", "r = p+2 mod p-1, r = 0 mod p, r >= 3p+2",
         [](u32 p, u64 r) {
             return r >= 3 * (u64)p + 2 && r % (p - 1) == 3 % (p - 1) && r % p == 0;
         },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             if (x.s2.dim() == x.s3.dim())
                 return fail("lem:aEq3VrAstAst", p, r, "X**/X*** = 0");
             return pass("lem:aEq3VrAstAst", p, r);
         }});

    add({"lem:Xr2r3AstAstModAstAstAstEqualModP", "r = p+2 mod p-1, r = 1,2 mod p, r >= 3p+2",
         [](u32 p, u64 r) {
             return r >= 3 * (u64)p + 2 && r % (p - 1) == 3 % (p - 1) &&
                    (r % p == 1 || r % p == 2);
         },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             if (x.s2.dim() != x.s3.dim())
                 return fail("lem:Xr2r3AstAstModAstAstAstEqualModP", p, r, "X**/X*** != 0");
             return pass("lem:Xr2r3AstAstModAstAstAstEqualModP", p, r);
         }});

    add({"lem:Xr-2AstAstModXr-2AstAstAstUnequalModPaEqual4", "r = p+3 mod p-1, r != 2,3 mod p",
         [](u32 p, u64 r) {
             return r >= 3 * (u64)p + 2 && r % (p - 1) == 4 % (p - 1) && r % p != 2 && r % p != 3;
         },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             if (x.s2.dim() == x.s3.dim())
                 return fail("lem:Xr-2AstAstModXr-2AstAstAstUnequalModPaEqual4", p, r,
                             "X**/X*** = 0");
             return pass("lem:Xr-2AstAstModXr-2AstAstAstUnequalModPaEqual4", p, r);
         }});

    add({"lem:Xr2r4AstAstModAstAstAstEqualMod2", "r = p+3 mod p-1, r = 2 mod p",
         [](u32 p, u64 r) {
             return r >= 3 * (u64)p + 2 && r % (p - 1) == 4 % (p - 1) && r % p == 2;
         },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             if (x.s2.dim() == x.s3.dim())
                 return fail("lem:Xr2r4AstAstModAstAstAstEqualMod2", p, r, "X**/X*** = 0");
             return pass("lem:Xr2r4AstAstModAstAstAstEqualMod2", p, r);
         }});

    add({"lem:Xr2r4AstAstModAstAstAstEqualModP", "r = p+3 mod p-1, r = 4 mod p",
         [](u32 p, u64 r) {
             return r >= 3 * (u64)p + 2 && r % (p - 1) == 4 % (p - 1) && r % p == 4;
         },
         [](u32 p, u64 r) {
             X2Stars x = x2_stars(p, r);
             JHMultiset got = jh_of_quotient(x.s2, x.s3, "X**/X***");
             JHMultiset want;
             want.add(lab(p, p - 1, 2));
             CheckReport rep = pass("lem:Xr2r4AstAstModAstAstAstEqualModP", p, r);
             eq_report(rep, got, want, "X**/X***");
             return rep;
         }});
}

void TheoremRegistry::register_qprops() {
    struct Hedged {
        JHMultiset mandatory, optional;
        u32 min_extra = 0;
        u32 max_extra = UINT32_MAX;
    };

    auto run_qprop = [](const std::string& id, u32 p, u64 r, const Hedged& hw,
                        const JHMultiset& wantU) {
        QBundle b = build_q_bundle(p, r);
        CheckReport rep = pass(id, p, r, "JH(Q)=[" + b.jhQ.str() + "]");
        eq_report(rep, b.jhU, wantU, "U");
        // W must contain the mandatory factors, lie inside mandatory+optional,
        // and respect the extra-count bounds
        if (!hw.mandatory.submultiset_of(b.jhW)) {
            rep.status = CheckStatus::fail;
            rep.witness += "W missing mandatory [" + hw.mandatory.str() + "] got [" +
                           b.jhW.str() + "]; ";
            return rep;
        }
        JHMultiset extra = b.jhW;
        for (const auto& [l, m] : hw.mandatory.mult)
            for (u32 t = 0; t < m; ++t) extra.remove_one(l);
        if (!extra.submultiset_of(hw.optional)) {
            rep.status = CheckStatus::fail;
            rep.witness += "W extras [" + extra.str() + "] outside optional [" +
                           hw.optional.str() + "]; ";
            return rep;
        }
        u64 cnt = extra.factors();
        if (cnt < hw.min_extra || cnt > hw.max_extra) {
            rep.status = CheckStatus::fail;
            rep.witness += "W extra count " + std::to_string(cnt) + "; ";
        }
        return rep;
    };

    auto base_applies = [](u32 p, u64 r) { return r >= 3 * (u64)p + 2; };

    add({"prop:QrEq3", "r = 3 mod p-1, r >= 3p+2",
         [base_applies](u32 p, u64 r) {
             return base_applies(p, r) && r % (p - 1) == 3 % (p - 1);
         },
         [run_qprop](u32 p, u64 r) {
             Hedged hw;
             u64 rp = r % p;
             if (rp == 0) hw.mandatory.add(lab(p, 1, 1));
             else if (rp == 1 || rp == 2) {
                 hw.mandatory.add(lab(p, p - 2, 2), 2);
                 hw.mandatory.add(lab(p, 1, 1));
             }
             JHMultiset wantU;
             wantU.add(lab(p, p - 4, 3));
             return run_qprop("prop:QrEq3", p, r, hw, wantU);
         }});

    add({"prop:QrEq4", "r = 4 mod p-1, r >= 3p+2",
         [base_applies](u32 p, u64 r) {
             return base_applies(p, r) && r % (p - 1) == 4 % (p - 1) && p > 5;
         },
         [run_qprop](u32 p, u64 r) {
             Hedged hw;
             u64 rp = r % p;
             hw.mandatory.add(lab(p, p - 3, 3));
             if (rp == 2) {
                 hw.mandatory.add(lab(p, p - 1, 2));
             } else if (rp == 3) {
                 hw.optional.add(lab(p, 0, 2));
                 hw.optional.add(lab(p, p - 1, 2));
                 hw.min_extra = 1;
             } else if (rp == 4) {
                 hw.mandatory.add(lab(p, 2, 1));
                 hw.mandatory.add(lab(p, 0, 2));
             } else {
                 hw.optional.add(lab(p, 0, 2));
                 hw.optional.add(lab(p, p - 1, 2));
                 hw.max_extra = 1;
             }
             JHMultiset wantU;
             wantU.add(lab(p, p - 5, 4));
             return run_qprop("prop:QrEq4", p, r, hw, wantU);
         }});

    add({"prop:QrEqp", "r = p mod p-1, r >= 3p+2",
         [base_applies](u32 p, u64 r) {
             return base_applies(p, r) && r % (p - 1) == 1 % (p - 1);
         },
         [run_qprop](u32 p, u64 r) {
             Hedged hw;
             u64 rp = r % p;
             if (rp == 0) {
                 // W = V*/V***: all four factors
                 hw.mandatory.add(lab(p, p - 2, 1));
                 hw.mandatory.add(lab(p, 1, 0));
                 hw.mandatory.add(lab(p, p - 4, 2));
                 hw.mandatory.add(lab(p, 3, p - 2));
             } else if (rp == p - 1) {
                 hw.mandatory.add(lab(p, 1, 0));
                 hw.optional.add(lab(p, p - 4, 2));
                 hw.optional.add(lab(p, 3, p - 2));
             } else {
                 hw.mandatory.add(lab(p, 1, 0));
                 hw.mandatory.add(lab(p, 3, p - 2));
             }
             return run_qprop("prop:QrEqp", p, r, hw, JHMultiset{});
         }});

    add({"prop:QrEqp+1", "r = p+1 mod p-1, r >= 3p+2",
         [base_applies](u32 p, u64 r) {
             return base_applies(p, r) && r % (p - 1) == 2 % (p - 1);
         },
         [run_qprop](u32 p, u64 r) {
             Hedged hw;
             u64 rp = r % p;
             if (rp == 1) {
                 hw.mandatory.add(lab(p, p - 3, 2));
                 hw.mandatory.add(lab(p, 2, 0));
                 hw.mandatory.add(lab(p, p - 1, 1));
             } else if (rp == 0) {
                 hw.mandatory.add(lab(p, p - 3, 2));
                 hw.mandatory.add(lab(p, 2, 0));
                 hw.mandatory.add(lab(p, 0, 1));
             } else {
                 hw.mandatory.add(lab(p, 2, 0));
             }
             return run_qprop("prop:QrEqp+1", p, r, hw, JHMultiset{});
         }});

    add({"prop:QrEqA", "a in [5, p-1], r = a mod p, r >= 3p+2",
         [base_applies](u32 p, u64 r) {
             u32 a = residue_window(r, p, 3);
             return base_applies(p, r) && a >= 5 && a <= p - 1 && r % p == a % p;
         },
         [run_qprop](u32 p, u64 r) {
             u32 a = residue_window(r, p, 3);
             Hedged hw; // W = V_r^*/V_r^{***}, all four factors
             hw.mandatory.add(lab(p, a - 2, 1));
             hw.mandatory.add(lab(p, p - a + 1, a - 1));
             hw.mandatory.add(lab(p, a - 4, 2));
             hw.mandatory.add(lab(p, p - a + 3, a - 2));
             JHMultiset wantU;
             wantU.add(lab(p, p - a - 1, a));
             return run_qprop("prop:QrEqA", p, r, hw, wantU);
         }});

    add({"prop:Qrnota", "a in [5, p-1], r != a, a-1 mod p, r >= 3p+2",
         [base_applies](u32 p, u64 r) {
             u32 a = residue_window(r, p, 3);
             return base_applies(p, r) && a >= 5 && a <= p - 1 && r % p != a % p &&
                    r % p != (a - 1) % p;
         },
         [run_qprop](u32 p, u64 r) {
             u32 a = residue_window(r, p, 3);
             Hedged hw;
             hw.mandatory.add(lab(p, p - a + 1, a - 1));
             hw.mandatory.add(lab(p, p - a + 3, a - 2));
             JHMultiset wantU;
             wantU.add(lab(p, p - a - 1, a));
             return run_qprop("prop:Qrnota", p, r, hw, wantU);
         }});

    add({"prop:QrEqA-1", "a in [5, p-1], r = a-1 mod p, r >= 3p+2",
         [base_applies](u32 p, u64 r) {
             u32 a = residue_window(r, p, 3);
             return base_applies(p, r) && a >= 5 && a <= p - 1 && r % p == (a - 1) % p;
         },
         [run_qprop](u32 p, u64 r) {
             u32 a = residue_window(r, p, 3);
             Hedged hw;
             hw.mandatory.add(lab(p, p - a + 1, a - 1));
             hw.optional.add(lab(p, a - 4, 2));
             hw.optional.add(lab(p, p - a + 3, a - 2));
             JHMultiset wantU;
             wantU.add(lab(p, p - a - 1, a));
             return run_qprop("prop:QrEqA-1", p, r, hw, wantU);
         }});
}

void TheoremRegistry::register_hecke_backed() {
    for (const std::string& prop : elim_prop_ids()) {
        add({prop, "hypotheses of the elimination proposition",
             [prop](u32 p, u64 r) { return elim_prop_applies(prop, p, r); },
             [prop](u32 p, u64 r) {
                 ElimCheck c = check_elimination(prop, p, r, default_slope(p));
                 CheckReport rep{prop, p, r,
                                 c.status == CheckStatus::pass ? CheckStatus::pass
                                                               : c.status,
                                 c.detail};
                 return rep;
             }});
    }
    auto sep = [](const char* id, u32 kind) {
        return CheckId{id, "section-6 theorem hypotheses",
                       [kind](u32 p, u64 r) {
                           if (r < 3 * (u64)p + 2) return false;
                           u64 pm1 = p - 1;
                           if (kind == 0)
                               return r % pm1 == 3 % pm1 && (r % p == 1 || r % p == 2);
                           if (kind == 1)
                               return r % pm1 == 5 % pm1 && (r % p == 2 || r % p == 3);
                           return r % pm1 == 1 % pm1 && r % p == 0 &&
                                  (r - p) % ((u64)p * p) == 0;
                       },
                       [id](u32 p, u64 r) {
                           SeparationResult s = check_reducibility_split(p, r, default_slope(p));
                           return CheckReport{id, p, r, s.status, s.detail};
                       }};
    };
    add(sep("thm:sepAeq3", 0));
    add(sep("thm:sepAeq5", 1));
    add(sep("thm:sepAeqP", 2));

    add({"thm:main-table", "r >= 3p+2", [](u32 p, u64 r) { return r >= 3 * (u64)p + 2; },
         [](u32 p, u64 r) {
             TableCompare tc = theorem_table_compare(p, r, default_slope(p));
             return CheckReport{"thm:main-table", p, r, tc.status, tc.detail};
         }});
}

} // namespace padicrep
