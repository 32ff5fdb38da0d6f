#include "padicrep/tree.hpp"

#include "padicrep/binom.hpp"

#include <sstream>

namespace padicrep {

std::string VertexId::str() const {
    if (alpha) return "alpha";
    std::ostringstream os;
    os << "g0[" << level() << ";";
    for (size_t i = 0; i < digits.size(); ++i) os << (i ? "," : "") << digits[i];
    os << "]";
    return os.str();
}

std::vector<PiLaurent>& TreeFn::at(const VertexId& v) {
    auto it = values_.find(v);
    if (it == values_.end()) {
        std::vector<PiLaurent> zero(r_ + 1, PiLaurent::zero(ring_));
        it = values_.emplace(v, std::move(zero)).first;
    }
    return it->second;
}

const std::vector<PiLaurent>* TreeFn::find(const VertexId& v) const {
    auto it = values_.find(v);
    return it == values_.end() ? nullptr : &it->second;
}

void TreeFn::add_term(const VertexId& v, u64 ydeg, const PiLaurent& c) {
    at(v).at(ydeg) += c;
}

void TreeFn::prune() {
    for (auto it = values_.begin(); it != values_.end();) {
        bool allzero = true;
        for (const auto& c : it->second)
            if (!c.exact_zero()) { allzero = false; break; }
        it = allzero ? values_.erase(it) : std::next(it);
    }
}

TreeFn& TreeFn::operator+=(const TreeFn& o) {
    if (!(ring_ == o.ring_) || r_ != o.r_) throw domain_error("TreeFn: mixed ambient data");
    for (const auto& [v, val] : o.values_) {
        auto& mine = at(v);
        for (u64 j = 0; j <= r_; ++j) mine[j] += val[j];
    }
    return *this;
}

TreeFn& TreeFn::operator-=(const TreeFn& o) {
    if (!(ring_ == o.ring_) || r_ != o.r_) throw domain_error("TreeFn: mixed ambient data");
    for (const auto& [v, val] : o.values_) {
        auto& mine = at(v);
        for (u64 j = 0; j <= r_; ++j) mine[j] -= val[j];
    }
    return *this;
}

TreeFn TreeFn::scaled(const PiLaurent& c) const {
    TreeFn out(ring_, r_);
    for (const auto& [v, val] : values_) {
        auto& dst = out.at(v);
        for (u64 j = 0; j <= r_; ++j) dst[j] = val[j] * c;
    }
    return out;
}

TreeFn::IntegralityWitness TreeFn::integrality() const {
    IntegralityWitness w;
    for (const auto& [v, val] : values_) {
        for (u64 j = 0; j <= r_; ++j) {
            bool ok;
            try {
                ok = val[j].val_at_least_pi(0);
            } catch (const precision_error& e) {
                w.ok = false;
                w.vertex = v;
                w.index = j;
                w.detail = std::string("precision: ") + e.what();
                return w;
            }
            if (!ok) {
                w.ok = false;
                w.vertex = v;
                w.index = j;
                w.detail = "negative valuation";
                return w;
            }
        }
    }
    return w;
}

std::map<VertexId, HomPoly> TreeFn::reduce_mod_pi() const {
    std::map<VertexId, HomPoly> out;
    for (const auto& [v, val] : values_) {
        HomPoly f(ring_.p, r_);
        bool nz = false;
        for (u64 j = 0; j <= r_; ++j) {
            u32 c = val[j].residue();
            f.coeffs[j] = c;
            nz |= c != 0;
        }
        if (nz) out.emplace(v, std::move(f));
    }
    return out;
}

// Pascal triangle mod the component modulus, cached per (p, M, rmax).
namespace {
struct BinomCache {
    u64 mod = 0;
    std::vector<std::vector<u64>> rows;
    void ensure(u64 mod_in, u64 rmax) {
        if (mod != mod_in) {
            mod = mod_in;
            rows.assign(1, {1 % mod});
        }
        while (rows.size() <= rmax) {
            const auto& prev = rows.back();
            std::vector<u64> next(prev.size() + 1, 0);
            next[0] = 1 % mod;
            for (size_t k = 1; k < prev.size(); ++k) {
                next[k] = prev[k - 1] + prev[k];
                if (next[k] >= mod) next[k] -= mod;
            }
            next[prev.size()] = 1 % mod;
            rows.push_back(std::move(next));
        }
    }
    u64 get(u64 n, u64 k) const { return k <= n ? rows[n][k] : 0; }
};
thread_local BinomCache tl_binom;
} // namespace

TreeFn t_plus(const TreeFn& f) {
    const PiRing& R = f.ring();
    const u64 r = f.r();
    const u64 m = R.comp_mod();
    tl_binom.ensure(m, r);
    TreeFn out(R, r);
    for (const auto& [v, val] : f.support()) {
        if (v.alpha) throw domain_error("t_plus: input supported on alpha");
        for (u32 lam = 0; lam < R.p; ++lam) {
            u64 tl = teichmuller(lam, R.p, R.comp_digits());
            u64 w = (m - tl % m) % m; // -[lambda]
            std::vector<u64> wpow(r + 1);
            wpow[0] = 1 % m;
            for (u64 t = 1; t <= r; ++t) wpow[t] = mulmod(wpow[t - 1], w, m);
            VertexId nv = v;
            nv.digits.push_back(lam);
            auto& dst = out.at(nv);
            for (u64 j = 0; j <= r; ++j) {
                PiLaurent acc = PiLaurent::zero(R);
                for (u64 i = j; i <= r; ++i) {
                    if (val[i].exact_zero()) continue;
                    u64 c = mulmod(tl_binom.get(i, j), wpow[i - j], m);
                    if (c == 0) continue;
                    PiLaurent term = val[i];
                    term.mul_residue(c);
                    acc += term;
                }
                if (acc.exact_zero()) continue;
                acc.mul_p_pow(static_cast<i64>(j));
                dst[j] += acc;
            }
        }
    }
    out.prune();
    return out;
}

TreeFn t_minus(const TreeFn& f) {
    const PiRing& R = f.ring();
    const u64 r = f.r();
    const u64 m = R.comp_mod();
    const u32 M = R.comp_digits();
    tl_binom.ensure(m, r);
    TreeFn out(R, r);
    for (const auto& [v, val] : f.support()) {
        if (v.alpha) throw domain_error("t_minus: input supported on alpha");
        if (v.level() == 0) {
            // [alpha, sum p^{r-j} c_j X^{r-j} Y^j]
            auto& dst = out.at(VertexId::sink());
            for (u64 j = 0; j <= r; ++j) {
                if (val[j].exact_zero()) continue;
                if (r - j >= 4 * static_cast<u64>(M)) continue; // far beyond any precision
                PiLaurent term = val[j];
                term.mul_p_pow(static_cast<i64>(r - j));
                dst[j] += term;
            }
            continue;
        }
        VertexId nv = v;
        u32 top = nv.digits.back();
        nv.digits.pop_back();
        u64 w = teichmuller(top, R.p, M) % m;
        std::vector<u64> wpow(r + 1);
        wpow[0] = 1 % m;
        for (u64 t = 1; t <= r; ++t) wpow[t] = mulmod(wpow[t - 1], w, m);
        auto& dst = out.at(nv);
        // p^{r-i} kills everything with r - i beyond the grid
        u64 i_min = r >= 4 * static_cast<u64>(M) ? r - 4 * static_cast<u64>(M) : 0;
        for (u64 j = 0; j <= r; ++j) {
            PiLaurent acc = PiLaurent::zero(R);
            for (u64 i = std::max(j, i_min); i <= r; ++i) {
                if (val[i].exact_zero()) continue;
                u64 c = mulmod(tl_binom.get(i, j), wpow[i - j], m);
                if (c == 0) continue;
                PiLaurent term = val[i];
                term.mul_residue(c);
                term.mul_p_pow(static_cast<i64>(r - i));
                acc += term;
            }
            if (!acc.exact_zero()) dst[j] += acc;
        }
    }
    out.prune();
    return out;
}

TreeFn t_apply(const TreeFn& f) {
    TreeFn out = t_plus(f);
    out += t_minus(f);
    out.prune();
    return out;
}

std::map<VertexId, HomPoly> t_bar_apply(const std::map<VertexId, HomPoly>& f, u32 p) {
    require_prime_ge5(p);
    std::map<VertexId, HomPoly> out;
    auto add = [&](const VertexId& v, const HomPoly& g) {
        if (g.is_zero()) return;
        auto it = out.find(v);
        if (it == out.end()) out.emplace(v, g);
        else it->second += g;
    };
    for (const auto& [v, val] : f) {
        if (v.alpha) throw domain_error("t_bar_apply: input supported on alpha");
        const u64 n = val.r;
        // T+: only j = 0 survives mod p
        for (u32 lam = 0; lam < p; ++lam) {
            u64 s = 0, pw = 1;
            for (u64 i = 0; i <= n; ++i) {
                s = (s + static_cast<u64>(val.coeffs[i]) * pw) % p;
                pw = pw * (p - lam % p) % p; // (-lambda)^i
            }
            if (!s) continue;
            VertexId nv = v;
            nv.digits.push_back(lam);
            add(nv, HomPoly::monomial(p, n, 0, static_cast<i64>(s)));
        }
        // T-: only i = n survives mod p
        u32 cn = val.coeffs[n];
        if (cn) {
            if (v.level() == 0) {
                if (n == 0) add(VertexId::sink(), HomPoly::monomial(p, 0, 0, cn));
                else add(VertexId::sink(), HomPoly::monomial(p, n, n, cn)); // p^{n-j}: only j = n
            } else {
                VertexId nv = v;
                u32 top = nv.digits.back();
                nv.digits.pop_back();
                // c_n (lambda X + Y)^n
                HomPoly g(p, n);
                u64 lpow = 1;
                std::vector<u64> row = binom_row_mod(n, p);
                for (u64 j = n + 1; j-- > 0;) {
                    g.coeffs[j] = static_cast<u32>(static_cast<u64>(cn) * row[j] % p * lpow % p);
                    lpow = lpow * top % p;
                }
                add(nv, g);
            }
        }
    }
    return out;
}

SlopeParam::SlopeParam(PiRing rg, i64 pi_power, i64 unit) : ring(rg) {
    a_p = PiLaurent::pi_power(rg, pi_power);
    a_p.mul_residue(static_cast<u64>(((unit % static_cast<i64>(rg.comp_mod())) +
                                      static_cast<i64>(rg.comp_mod())) %
                                     static_cast<i64>(rg.comp_mod())));
}

std::pair<i64, i64> SlopeParam::slope() const {
    auto v = a_p.val_p();
    if (!v) throw domain_error("SlopeParam: a_p is zero");
    return *v;
}

void SlopeParam::require_open_interval() const {
    auto [num, den] = slope();
    if (!(2 * den < num && num < 3 * den))
        throw domain_error("SlopeParam: slope must lie strictly between 2 and 3");
}

bool SlopeParam::is_half_five() const {
    auto [num, den] = slope();
    return 2 * num == 5 * den;
}

bool SlopeParam::ap2_minus_p5_has_val5() const {
    PiLaurent d = a_p * a_p - PiLaurent::pi_power(ring, 5 * static_cast<i64>(ring.e));
    try {
        auto v = d.val_pi();
        if (!v) return false; // zero to working precision
        return *v == 5 * static_cast<i64>(ring.e);
    } catch (const precision_error&) {
        return false;
    }
}

} // namespace padicrep
