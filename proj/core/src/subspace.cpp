#include "padicrep/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace padicrep {

Subspace Subspace::full(u32 p, u64 r) {
    Subspace s(p, r);
    for (u64 j = 0; j <= r; ++j) {
        std::vector<u32> row(r + 1, 0);
        row[j] = 1;
        s.rows_.push_back(std::move(row));
        s.pivots_.push_back(j);
    }
    return s;
}

Subspace Subspace::span(u32 p, u64 r, const std::vector<HomPoly>& gens) {
    Subspace s(p, r);
    for (const auto& g : gens) s.insert(g);
    return s;
}

void Subspace::check(const HomPoly& f) const {
    if (f.p != p_ || f.r != r_) throw domain_error("Subspace: ambient mismatch");
}

HomPoly Subspace::row_poly(u64 i) const {
    HomPoly f(p_, r_);
    f.coeffs = rows_.at(i);
    return f;
}

std::vector<u32> Subspace::reduce(std::vector<u32> v) const {
    const u32 p = p_;
    for (size_t i = 0; i < rows_.size(); ++i) {
        u32 c = v[pivots_[i]];
        if (!c) continue;
        u32 mul = p - c; // subtract c * row (rows have pivot 1)
        const auto& row = rows_[i];
        for (u64 k = pivots_[i]; k <= r_; ++k) {
            if (!row[k]) continue;
            v[k] = static_cast<u32>((v[k] + static_cast<u64>(mul) * row[k]) % p);
        }
    }
    return v;
}

bool Subspace::insert(const std::vector<u32>& row_in) {
    if (row_in.size() != r_ + 1) throw domain_error("Subspace: row length mismatch");
    std::vector<u32> v = reduce(row_in);
    u64 piv = r_ + 1;
    for (u64 k = 0; k <= r_; ++k)
        if (v[k]) { piv = k; break; }
    if (piv == r_ + 1) return false;
    // normalise pivot to 1
    u64 inv = powmod(v[piv], p_ - 2, p_);
    for (u64 k = piv; k <= r_; ++k) v[k] = static_cast<u32>(v[k] * inv % p_);
    // clear this column in existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
        u32 c = rows_[i][piv];
        if (!c) continue;
        u32 mul = p_ - c;
        for (u64 k = piv; k <= r_; ++k)
            rows_[i][k] = static_cast<u32>((rows_[i][k] + static_cast<u64>(mul) * v[k]) % p_);
    }
    // insert keeping pivots ascending
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

bool Subspace::contains(const HomPoly& f) const {
    check(f);
    auto v = reduce(f.coeffs);
    return std::all_of(v.begin(), v.end(), [](u32 c) { return c == 0; });
}

bool Subspace::contains(const Subspace& o) const {
    if (o.p_ != p_ || o.r_ != r_) throw domain_error("Subspace: ambient mismatch");
    for (const auto& row : o.rows_) {
        auto v = reduce(row);
        if (!std::all_of(v.begin(), v.end(), [](u32 c) { return c == 0; })) return false;
    }
    return true;
}

std::optional<std::vector<u32>> Subspace::coords(const HomPoly& f) const {
    check(f);
    std::vector<u32> v = f.coeffs;
    std::vector<u32> out(rows_.size(), 0);
    const u32 p = p_;
    for (size_t i = 0; i < rows_.size(); ++i) {
        u32 c = v[pivots_[i]];
        out[i] = c;
        if (!c) continue;
        u32 mul = p - c;
        const auto& row = rows_[i];
        for (u64 k = pivots_[i]; k <= r_; ++k) {
            if (!row[k]) continue;
            v[k] = static_cast<u32>((v[k] + static_cast<u64>(mul) * row[k]) % p);
        }
    }
    if (!std::all_of(v.begin(), v.end(), [](u32 c) { return c == 0; })) return std::nullopt;
    return out;
}

std::string Subspace::dump_json() const {
    std::ostringstream os;
    os << "{\"p\":" << p_ << ",\"r\":" << r_ << ",\"rows\":[";
    for (size_t i = 0; i < rows_.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (u64 k = 0; k <= r_; ++k) os << (k ? "," : "") << rows_[i][k];
        os << "]";
    }
    os << "]}";
    return os.str();
}

Subspace sum_spaces(const Subspace& a, const Subspace& b) {
    if (a.p() != b.p() || a.r() != b.r()) throw domain_error("sum_spaces: ambient mismatch");
    Subspace s = a;
    for (const auto& row : b.rows()) s.insert(row);
    return s;
}

// Zassenhaus: rref of [A|A; B|0], rows with zero left half carry the
// intersection on the right.
Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.p() != b.p() || a.r() != b.r()) throw domain_error("intersect: ambient mismatch");
    const u32 p = a.p();
    const u64 n = a.r() + 1;
    std::vector<std::vector<u32>> m;
    for (const auto& row : a.rows()) {
        std::vector<u32> v(2 * n, 0);
        std::copy(row.begin(), row.end(), v.begin());
        std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
        m.push_back(std::move(v));
    }
    for (const auto& row : b.rows()) {
        std::vector<u32> v(2 * n, 0);
        std::copy(row.begin(), row.end(), v.begin());
        m.push_back(std::move(v));
    }
    // plain rref on the doubled matrix
    size_t rank = 0;
    for (u64 col = 0; col < 2 * n && rank < m.size(); ++col) {
        size_t sel = rank;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        u64 inv = powmod(m[rank][col], p - 2, p);
        for (u64 k = col; k < 2 * n; ++k) m[rank][k] = static_cast<u32>(m[rank][k] * inv % p);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            u64 f = m[i][col];
            for (u64 k = col; k < 2 * n; ++k)
                m[i][k] = static_cast<u32>((m[i][k] + (p - f) * m[rank][k]) % p);
        }
        ++rank;
    }
    Subspace out(p, a.r());
    for (const auto& v : m) {
        bool left_zero = std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n),
                                     [](u32 c) { return c == 0; });
        if (!left_zero) continue;
        std::vector<u32> right(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
        out.insert(right);
    }
    return out;
}

Subquotient::Subquotient(Subspace U, Subspace W) : upper(std::move(U)), lower(std::move(W)) {
    if (!upper.contains(lower)) throw domain_error("Subquotient: W not contained in U");
}

std::vector<Mat2> monoid_generators(u32 p, MonoidChoice which) {
    u32 g = primitive_root(p);
    std::vector<Mat2> gens{Mat2(p, 1, 1, 0, 1), Mat2(p, 1, 0, 1, 1), Mat2(p, g, 0, 0, 1)};
    if (which == MonoidChoice::M) gens.push_back(Mat2(p, 1, 0, 0, 0));
    return gens;
}

Subspace orbit_span(const std::vector<HomPoly>& generators, MonoidChoice which) {
    if (generators.empty()) throw domain_error("orbit_span: no generators");
    const u32 p = generators.front().p;
    const u64 r = generators.front().r;
    Subspace s = Subspace::span(p, r, generators);
    auto gens = monoid_generators(p, which);
    u64 stable = 0;
    u64 iter_guard = 0;
    while (stable < 2) {
        u64 before = s.dim();
        Subspace next = s;
        for (const auto& m : gens)
            for (u64 i = 0; i < s.dim(); ++i) next.insert(act(m, s.row_poly(i)));
        s = std::move(next);
        stable = (s.dim() == before) ? stable + 1 : 0;
        if (++iter_guard > r + 4) throw internal_error("orbit_span: closure did not stabilise");
    }
    return s;
}

Subspace x_submodule(u32 p, u64 r, u32 i) {
    if (i > r) throw domain_error("x_submodule: i > r");
    return orbit_span({HomPoly::monomial(p, r, r - i)}, MonoidChoice::Gamma);
}

Subspace vr_star(u32 p, u64 r, u32 k) {
    Subspace out(p, r);
    u64 need = static_cast<u64>(k) * (p + 1);
    if (r < need || k == 0) {
        if (k == 0) return Subspace::full(p, r);
        return out;
    }
    const u64 rs = r - need;
    for (u64 j = 0; j <= rs; ++j) {
        HomPoly f = HomPoly::monomial(p, rs, j);
        for (u32 t = 0; t < k; ++t) f = theta_mul(f);
        out.insert(f);
    }
    return out;
}

Subspace singular_kernel(const Subspace& W) {
    const u32 p = W.p();
    const u64 r = W.r();
    if (W.dim() == 0) return W;
    // constraints: act(n, w) = 0 for every singular n, expressed on the basis
    std::vector<std::vector<u32>> constraints; // rows over basis coordinates
    for (u32 a = 0; a < p; ++a)
        for (u32 b = 0; b < p; ++b)
            for (u32 c = 0; c < p; ++c)
                for (u32 d = 0; d < p; ++d) {
                    Mat2 n(p, a, b, c, d);
                    if (n.det() != 0) continue;
                    // act(n, basis_i) is a multiple of a single line; collect the
                    // scalar rows it imposes
                    std::vector<HomPoly> images;
                    images.reserve(W.dim());
                    for (u64 i = 0; i < W.dim(); ++i) images.push_back(act(n, W.row_poly(i)));
                    // the images live on one line; record the coefficientwise rows
                    for (u64 coord = 0; coord <= r; ++coord) {
                        std::vector<u32> row(W.dim(), 0);
                        bool nonzero = false;
                        for (u64 i = 0; i < W.dim(); ++i) {
                            row[i] = images[i].coeffs[coord];
                            nonzero |= row[i] != 0;
                        }
                        if (nonzero) constraints.push_back(std::move(row));
                        if (nonzero) break; // rank-one image: one row suffices
                    }
                }
    // nullspace of the constraint matrix, mapped back through the basis
    const u64 d = W.dim();
    // rref the constraints
    std::vector<std::vector<u32>>& m = constraints;
    std::vector<u64> pivots;
    size_t rank = 0;
    for (u64 col = 0; col < d && rank < m.size(); ++col) {
        size_t sel = rank;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        u64 inv = powmod(m[rank][col], p - 2, p);
        for (u64 k = 0; k < d; ++k) m[rank][k] = static_cast<u32>(m[rank][k] * inv % p);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            u64 f = m[i][col];
            for (u64 k = 0; k < d; ++k)
                m[i][k] = static_cast<u32>((m[i][k] + (p - f) * m[rank][k]) % p);
        }
        pivots.push_back(col);
        ++rank;
    }
    Subspace out(p, r);
    for (u64 free = 0; free < d; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        // kernel vector with 1 at the free coordinate
        std::vector<u32> x(d, 0);
        x[free] = 1;
        for (size_t i = 0; i < rank; ++i)
            x[pivots[i]] = (p - m[i][free]) % p;
        HomPoly v(p, r);
        for (u64 i = 0; i < d; ++i) {
            if (!x[i]) continue;
            HomPoly row = W.row_poly(i).scaled(static_cast<i64>(x[i]));
            v += row;
        }
        out.insert(v);
    }
    return out;
}

StarFiltration star_filtration(const Subspace& W) {
    StarFiltration sf;
    sf.star1 = intersect(W, vr_star(W.p(), W.r(), 1));
    sf.star2 = intersect(W, vr_star(W.p(), W.r(), 2));
    sf.star3 = intersect(W, vr_star(W.p(), W.r(), 3));
    return sf;
}

} // namespace padicrep
