#include "padicrep/module.hpp"

#include <algorithm>
#include <sstream>

namespace padicrep {

bool RowBasis::insert(std::vector<u32> v) {
    if (v.size() != n_) throw domain_error("RowBasis: length mismatch");
    v = reduce(std::move(v));
    u64 piv = n_;
    for (u64 k = 0; k < n_; ++k)
        if (v[k]) { piv = k; break; }
    if (piv == n_) return false;
    u64 inv = powmod(v[piv], p_ - 2, p_);
    for (u64 k = piv; k < n_; ++k) v[k] = static_cast<u32>(v[k] * inv % p_);
    for (auto& row : rows_) {
        u32 c = row[piv];
        if (!c) continue;
        u32 mul = p_ - c;
        for (u64 k = piv; k < n_; ++k)
            row[k] = static_cast<u32>((row[k] + static_cast<u64>(mul) * v[k]) % p_);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

std::vector<u32> RowBasis::reduce(std::vector<u32> v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        u32 c = v[pivots_[i]];
        if (!c) continue;
        u32 mul = p_ - c;
        const auto& row = rows_[i];
        for (u64 k = pivots_[i]; k < n_; ++k) {
            if (!row[k]) continue;
            v[k] = static_cast<u32>((v[k] + static_cast<u64>(mul) * row[k]) % p_);
        }
    }
    return v;
}

bool RowBasis::contains(const std::vector<u32>& v) const {
    auto w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](u32 c) { return c == 0; });
}

std::optional<std::vector<u32>> RowBasis::coords(const std::vector<u32>& v) const {
    std::vector<u32> w = v;
    std::vector<u32> out(rows_.size(), 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        u32 c = w[pivots_[i]];
        out[i] = c;
        if (!c) continue;
        u32 mul = p_ - c;
        const auto& row = rows_[i];
        for (u64 k = pivots_[i]; k < n_; ++k) {
            if (!row[k]) continue;
            w[k] = static_cast<u32>((w[k] + static_cast<u64>(mul) * row[k]) % p_);
        }
    }
    if (!std::all_of(w.begin(), w.end(), [](u32 c) { return c == 0; })) return std::nullopt;
    return out;
}

u32 JHMultiset::count(IrredLabel l) const {
    auto it = mult.find(l);
    return it == mult.end() ? 0 : it->second;
}

u64 JHMultiset::total_dim() const {
    u64 s = 0;
    for (const auto& [l, m] : mult) s += static_cast<u64>(m) * (l.a + 1);
    return s;
}

u64 JHMultiset::factors() const {
    u64 s = 0;
    for (const auto& [l, m] : mult) s += m;
    return s;
}

void JHMultiset::add(IrredLabel l, u32 m) {
    if (m) mult[l] += m;
}

bool JHMultiset::remove_one(IrredLabel l) {
    auto it = mult.find(l);
    if (it == mult.end()) return false;
    if (--it->second == 0) mult.erase(it);
    return true;
}

JHMultiset JHMultiset::merged(const JHMultiset& o) const {
    JHMultiset out = *this;
    for (const auto& [l, m] : o.mult) out.mult[l] += m;
    return out;
}

bool JHMultiset::submultiset_of(const JHMultiset& o) const {
    for (const auto& [l, m] : mult)
        if (o.count(l) < m) return false;
    return true;
}

std::string JHMultiset::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, m] : mult) {
        if (!first) os << " ";
        first = false;
        os << "(" << l.a << "," << l.b << "):" << m;
    }
    if (first) os << "-";
    return os.str();
}

std::vector<u32> ModuleModel::apply(const std::vector<std::vector<u32>>& mat,
                                    const std::vector<u32>& v) const {
    std::vector<u32> out(dim, 0);
    for (u64 i = 0; i < dim; ++i) {
        u64 s = 0;
        const auto& row = mat[i];
        for (u64 j = 0; j < dim; ++j)
            if (v[j]) s += static_cast<u64>(row[j]) * v[j];
        out[i] = static_cast<u32>(s % p);
    }
    return out;
}

std::vector<u32> ModuleModel::apply(u32 g, const std::vector<u32>& v) const {
    return apply(gen.at(g), v);
}

static std::vector<std::vector<u32>> mat_mul(u32 p, const std::vector<std::vector<u32>>& A,
                                             const std::vector<std::vector<u32>>& B) {
    const u64 n = A.size();
    std::vector<std::vector<u32>> C(n, std::vector<u32>(n, 0));
    for (u64 i = 0; i < n; ++i)
        for (u64 k = 0; k < n; ++k) {
            if (!A[i][k]) continue;
            u64 a = A[i][k];
            for (u64 j = 0; j < n; ++j) {
                if (!B[k][j]) continue;
                C[i][j] = static_cast<u32>((C[i][j] + a * B[k][j]) % p);
            }
        }
    return C;
}

std::vector<std::vector<u32>> ModuleModel::matrix_of_word(const std::vector<i64>& word) const {
    // word entries: +1/+2/+3 mean generator U/L/D, negative entries raise the
    // generator to the power |entry| mod its order is caller's business
    std::vector<std::vector<u32>> acc(dim, std::vector<u32>(dim, 0));
    for (u64 i = 0; i < dim; ++i) acc[i][i] = 1;
    for (i64 w : word) {
        u32 g = static_cast<u32>((w > 0 ? w : -w) - 1);
        u64 times = 1;
        if (w < 0) times = p - 1; // inverse of a shear: (p-1)-th power
        for (u64 t = 0; t < times; ++t) acc = mat_mul(p, acc, gen.at(g));
    }
    return acc;
}

u32 ModuleModel::central_scalar() const {
    // z = diag(g, g) = D s D s^3 with s = U L^{-1} U
    std::vector<i64> s_word{1, -2, 1};
    std::vector<i64> word{3};
    word.insert(word.end(), s_word.begin(), s_word.end());
    word.push_back(3);
    for (int rep = 0; rep < 3; ++rep) word.insert(word.end(), s_word.begin(), s_word.end());
    auto z = matrix_of_word(word);
    u32 scalar = 0;
    for (u64 j = 0; j < dim; ++j) {
        for (u64 i = 0; i < dim; ++i) {
            if (i == j) continue;
            if (z[i][j] != 0) throw internal_error("central element does not act as a scalar");
        }
        if (j == 0) scalar = z[0][0];
        else if (z[j][j] != scalar)
            throw internal_error("central element does not act as a scalar");
    }
    return scalar;
}

ModuleModel irred_model(IrredLabel label, u32 p) {
    require_prime_ge5(p);
    if (label.a > p - 1 || label.b > p - 2) throw domain_error("irred_model: label out of range");
    ModuleModel M;
    M.p = p;
    M.dim = label.a + 1;
    M.provenance = "V_" + std::to_string(label.a) + " x D^" + std::to_string(label.b);
    for (const auto& g : monoid_generators(p, MonoidChoice::Gamma)) {
        u32 twist = powmod(g.det(), label.b, p) % p;
        std::vector<std::vector<u32>> mat(M.dim, std::vector<u32>(M.dim, 0));
        for (u64 j = 0; j < M.dim; ++j) {
            HomPoly image = act(g, HomPoly::monomial(p, label.a, j));
            for (u64 i = 0; i < M.dim; ++i)
                mat[i][j] = static_cast<u32>(static_cast<u64>(image.coeffs[i]) * twist % p);
        }
        M.gen.push_back(std::move(mat));
    }
    return M;
}

ModuleModel sym_power_model(u32 p, u64 n, const std::string& name) {
    ModuleModel M;
    M.p = p;
    M.dim = n + 1;
    M.provenance = name;
    for (const auto& g : monoid_generators(p, MonoidChoice::Gamma)) {
        std::vector<std::vector<u32>> mat(M.dim, std::vector<u32>(M.dim, 0));
        for (u64 j = 0; j < M.dim; ++j) {
            HomPoly image = act(g, HomPoly::monomial(p, n, j));
            for (u64 i = 0; i < M.dim; ++i) mat[i][j] = image.coeffs[i];
        }
        M.gen.push_back(std::move(mat));
    }
    return M;
}

ModuleModel tensor_model(const ModuleModel& A, const ModuleModel& B, const std::string& name) {
    if (A.p != B.p) throw domain_error("tensor_model: mixed primes");
    ModuleModel M;
    M.p = A.p;
    M.dim = A.dim * B.dim;
    M.provenance = name;
    for (u32 g = 0; g < 3; ++g) {
        std::vector<std::vector<u32>> mat(M.dim, std::vector<u32>(M.dim, 0));
        for (u64 ia = 0; ia < A.dim; ++ia)
            for (u64 ib = 0; ib < B.dim; ++ib)
                for (u64 ja = 0; ja < A.dim; ++ja)
                    for (u64 jb = 0; jb < B.dim; ++jb) {
                        u64 v = static_cast<u64>(A.gen[g][ia][ja]) * B.gen[g][ib][jb] % A.p;
                        if (v) mat[ia * B.dim + ib][ja * B.dim + jb] = static_cast<u32>(v);
                    }
        M.gen.push_back(std::move(mat));
    }
    return M;
}

ModuleModel submodule_model(const ModuleModel& M, const RowBasis& S, const std::string& name) {
    ModuleModel out;
    out.p = M.p;
    out.dim = S.dim();
    out.provenance = name;
    for (u32 g = 0; g < 3; ++g) {
        std::vector<std::vector<u32>> mat(out.dim, std::vector<u32>(out.dim, 0));
        for (u64 j = 0; j < out.dim; ++j) {
            auto img = M.apply(g, S.rows()[j]);
            auto c = S.coords(img);
            if (!c) throw domain_error("submodule_model: basis is not invariant");
            for (u64 i = 0; i < out.dim; ++i) mat[i][j] = (*c)[i];
        }
        out.gen.push_back(std::move(mat));
    }
    return out;
}

ModuleModel quotient_model(const ModuleModel& M, const RowBasis& S, const std::string& name) {
    // coordinates: the non-pivot columns of S
    std::vector<u64> free_cols;
    for (u64 c = 0; c < M.dim; ++c)
        if (!std::binary_search(S.pivots().begin(), S.pivots().end(), c)) free_cols.push_back(c);
    ModuleModel out;
    out.p = M.p;
    out.dim = free_cols.size();
    out.provenance = name;
    // invariance of S
    for (u32 g = 0; g < 3; ++g)
        for (const auto& row : S.rows())
            if (!S.contains(M.apply(g, row)))
                throw domain_error("quotient_model: submodule is not invariant");
    for (u32 g = 0; g < 3; ++g) {
        std::vector<std::vector<u32>> mat(out.dim, std::vector<u32>(out.dim, 0));
        for (u64 j = 0; j < out.dim; ++j) {
            std::vector<u32> e(M.dim, 0);
            e[free_cols[j]] = 1;
            auto img = S.reduce(M.apply(g, e));
            for (u64 i = 0; i < out.dim; ++i) mat[i][j] = img[free_cols[i]];
        }
        out.gen.push_back(std::move(mat));
    }
    return out;
}

std::vector<std::vector<std::vector<u32>>> hom_space(const ModuleModel& S, const ModuleModel& M) {
    if (S.p != M.p) throw domain_error("hom_space: mixed primes");
    const u32 p = S.p;
    const u64 ds = S.dim, dm = M.dim, nun = ds * dm;
    if (nun == 0) return {};
    // unknowns Phi[i][j], constraint G_M Phi = Phi G_S per generator
    std::vector<std::vector<u32>> rowsmat;
    rowsmat.reserve(3 * nun);
    for (u32 g = 0; g < 3; ++g) {
        for (u64 i = 0; i < dm; ++i)
            for (u64 j = 0; j < ds; ++j) {
                std::vector<u32> row(nun, 0);
                for (u64 k = 0; k < dm; ++k)
                    if (M.gen[g][i][k])
                        row[k * ds + j] = (row[k * ds + j] + M.gen[g][i][k]) % p;
                for (u64 l = 0; l < ds; ++l)
                    if (S.gen[g][l][j])
                        row[i * ds + l] =
                            static_cast<u32>((row[i * ds + l] + p - S.gen[g][l][j] % p) % p);
                bool nz = std::any_of(row.begin(), row.end(), [](u32 c) { return c != 0; });
                if (nz) rowsmat.push_back(std::move(row));
            }
    }
    // nullspace
    std::vector<u64> pivots;
    size_t rank = 0;
    for (u64 col = 0; col < nun && rank < rowsmat.size(); ++col) {
        size_t sel = rank;
        while (sel < rowsmat.size() && rowsmat[sel][col] == 0) ++sel;
        if (sel == rowsmat.size()) continue;
        std::swap(rowsmat[rank], rowsmat[sel]);
        u64 inv = powmod(rowsmat[rank][col], p - 2, p);
        for (u64 k = col; k < nun; ++k)
            rowsmat[rank][k] = static_cast<u32>(rowsmat[rank][k] * inv % p);
        for (size_t i = 0; i < rowsmat.size(); ++i) {
            if (i == rank || rowsmat[i][col] == 0) continue;
            u64 f = rowsmat[i][col];
            for (u64 k = col; k < nun; ++k)
                rowsmat[i][k] =
                    static_cast<u32>((rowsmat[i][k] + (p - f) * rowsmat[rank][k]) % p);
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<std::vector<std::vector<u32>>> out;
    for (u64 free = 0; free < nun; ++free) {
        if (std::binary_search(pivots.begin(), pivots.end(), free)) continue;
        std::vector<u32> x(nun, 0);
        x[free] = 1;
        for (size_t i = 0; i < rank; ++i) x[pivots[i]] = (p - rowsmat[i][free]) % p;
        std::vector<std::vector<u32>> phi(dm, std::vector<u32>(ds, 0));
        for (u64 i = 0; i < dm; ++i)
            for (u64 j = 0; j < ds; ++j) phi[i][j] = x[i * ds + j];
        out.push_back(std::move(phi));
    }
    return out;
}

static std::vector<IrredLabel> candidate_labels(const ModuleModel& M) {
    const u32 p = M.p;
    std::vector<IrredLabel> out;
    if (M.dim == 0) return out;
    u32 chi = M.central_scalar();
    u32 g = primitive_root(p);
    for (u32 a = 0; a + 1 <= M.dim && a <= p - 1; ++a)
        for (u32 b = 0; b <= p - 2; ++b)
            if (powmod(g, a + 2ull * b, p) == chi) out.push_back({a, b});
    return out;
}

SocleResult socle(const ModuleModel& M) {
    SocleResult res;
    res.submodule = RowBasis(M.p, M.dim);
    if (M.dim == 0) return res;
    for (IrredLabel l : candidate_labels(M)) {
        auto homs = hom_space(irred_model(l, M.p), M);
        if (homs.empty()) continue;
        res.layer.add(l, static_cast<u32>(homs.size()));
        for (const auto& phi : homs)
            for (u64 j = 0; j < phi[0].size(); ++j) {
                std::vector<u32> col(M.dim);
                for (u64 i = 0; i < M.dim; ++i) col[i] = phi[i][j];
                res.submodule.insert(std::move(col));
            }
    }
    if (res.layer.total_dim() != res.submodule.dim())
        throw internal_error("socle: multiplicity bookkeeping mismatch");
    return res;
}

std::vector<JHMultiset> socle_series(const ModuleModel& M) {
    std::vector<JHMultiset> layers;
    ModuleModel cur = M;
    u32 guard = 0;
    while (cur.dim > 0) {
        SocleResult s = socle(cur);
        if (s.submodule.dim() == 0)
            throw internal_error("socle_series: peel stalled (missing irreducible label?)");
        layers.push_back(s.layer);
        cur = quotient_model(cur, s.submodule, cur.provenance + "/soc");
        if (++guard > 64) throw internal_error("socle_series: runaway peel");
    }
    return layers;
}

JHMultiset jh_multiset(const ModuleModel& M) {
    JHMultiset out;
    for (const auto& layer : socle_series(M)) out = out.merged(layer);
    if (out.total_dim() != M.dim) throw internal_error("jh_multiset: dimension bookkeeping");
    return out;
}

bool is_split_extension(const ModuleModel& M, IrredLabel bottom, IrredLabel top) {
    JHMultiset expect;
    expect.add(bottom);
    expect.add(top);
    if (!(jh_multiset(M) == expect))
        throw domain_error("is_split_extension: module is not the stated 2-factor extension");
    return !hom_space(irred_model(top, M.p), M).empty();
}

RowBasis gamma_span(const ModuleModel& M, const std::vector<u32>& v) {
    RowBasis span(M.p, M.dim);
    if (!span.insert(v)) return span;
    bool grew = true;
    while (grew) {
        grew = false;
        auto rows = span.rows();
        for (u32 g = 0; g < 3; ++g)
            for (const auto& row : rows) grew |= span.insert(M.apply(g, row));
    }
    return span;
}

JHMultiset span_factors(const ModuleModel& M, const std::vector<std::vector<u32>>& vectors) {
    RowBasis span(M.p, M.dim);
    bool any = false;
    for (const auto& v : vectors) any |= span.insert(v);
    if (!any) return JHMultiset{};
    bool grew = true;
    while (grew) {
        grew = false;
        auto rows = span.rows();
        for (u32 g = 0; g < 3; ++g)
            for (const auto& row : rows) grew |= span.insert(M.apply(g, row));
    }
    return jh_multiset(submodule_model(M, span, "span"));
}

bool factor_hit(const std::vector<u32>& v, const ModuleModel& M, IrredLabel label) {
    RowBasis span = gamma_span(M, v);
    if (span.dim() == 0) return false;
    return jh_multiset(submodule_model(M, span, "span")).count(label) > 0;
}

bool generates_whole(const std::vector<u32>& v, const ModuleModel& M) {
    return gamma_span(M, v).dim() == M.dim;
}

PolyQuotientModel poly_quotient_model(const Subspace& U, const Subspace& W,
                                      const std::string& name) {
    PolyQuotientModel out;
    out.upper = U;
    out.lower = W;
    if (!U.contains(W)) throw domain_error("poly_quotient_model: W not inside U");
    const u32 p = U.p();
    const u64 r = U.r();
    out.reps = Subspace(p, r);
    for (u64 i = 0; i < U.dim(); ++i) out.reps.insert(W.reduce(U.rows()[i]));
    if (out.reps.dim() != U.dim() - W.dim())
        throw internal_error("poly_quotient_model: complement dimension mismatch");

    ModuleModel M;
    M.p = p;
    M.dim = out.reps.dim();
    M.provenance = name;
    auto gens = monoid_generators(p, MonoidChoice::Gamma);
    // well-definedness: the generators must keep W inside W
    for (const auto& g : gens)
        for (u64 i = 0; i < W.dim(); ++i)
            if (!W.contains(act(g, W.row_poly(i))))
                throw domain_error("poly_quotient_model: W is not Gamma-invariant");
    for (const auto& g : gens) {
        std::vector<std::vector<u32>> mat(M.dim, std::vector<u32>(M.dim, 0));
        for (u64 j = 0; j < M.dim; ++j) {
            HomPoly img = act(g, out.reps.row_poly(j));
            HomPoly red(p, r);
            red.coeffs = W.reduce(img.coeffs);
            auto c = out.reps.coords(red);
            if (!c) throw domain_error("poly_quotient_model: U is not Gamma-invariant");
            for (u64 i = 0; i < M.dim; ++i) mat[i][j] = (*c)[i];
        }
        M.gen.push_back(std::move(mat));
    }
    out.model = std::move(M);
    return out;
}

std::vector<u32> PolyQuotientModel::class_coords(const HomPoly& f) const {
    HomPoly red(upper.p(), upper.r());
    red.coeffs = lower.reduce(f.coeffs);
    auto c = reps.coords(red);
    if (!c) throw domain_error("class_coords: polynomial not in the upper space");
    return *c;
}

HomPoly PolyQuotientModel::representative(const std::vector<u32>& coords) const {
    HomPoly f(upper.p(), upper.r());
    for (u64 i = 0; i < reps.dim(); ++i) {
        if (!coords[i]) continue;
        f += reps.row_poly(i).scaled(static_cast<i64>(coords[i]));
    }
    return f;
}

} // namespace padicrep
