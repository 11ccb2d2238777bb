#include "asai/principal_series.hpp"

#include <algorithm>

namespace asai {

const char* kind_name(GroupKind k) {
    switch (k) {
    case GroupKind::H: return "H";
    case GroupKind::Split: return "split";
    case GroupKind::Inert: return "inert";
    }
    return "?";
}

PSParams PSParams::from_roots(GroupKind kind, int ell, const std::vector<SqrtScalar>& roots) {
    PSParams p;
    p.kind = kind;
    p.ell = ell;
    size_t need = kind == GroupKind::Split ? 4 : 2;
    if (roots.size() != need) throw std::invalid_argument("wrong number of Satake roots");
    for (size_t i = 0; i < need; i += 2) {
        p.sums.push_back(roots[i] + roots[i + 1]);
        p.prods.push_back(roots[i] * roots[i + 1]);
    }
    return p;
}

PSParams PSParams::symmetric(GroupKind kind, int ell, std::vector<SqrtScalar> sums, std::vector<SqrtScalar> prods) {
    PSParams p;
    p.kind = kind;
    p.ell = ell;
    p.sums = std::move(sums);
    p.prods = std::move(prods);
    if (p.sums.size() != static_cast<size_t>(p.pairs()) || p.prods.size() != p.sums.size())
        throw std::invalid_argument("wrong number of Satake pairs");
    return p;
}

SqrtScalar PSParams::central() const {
    SqrtScalar c(1);
    for (const auto& x : prods) c *= x;
    return c;
}

LocalField PSParams::field() const {
    return kind == GroupKind::Inert ? LocalField::unramified(ell) : LocalField::rational(ell);
}

std::string PSParams::str() const {
    std::string s = std::string(kind_name(kind)) + " ell=" + std::to_string(ell);
    for (int i = 0; i < pairs(); ++i) s += " (s=" + sums[i].str() + ",p=" + prods[i].str() + ")";
    return s;
}

namespace {
// complete homogeneous h_m(alpha, beta) from s = alpha+beta, p = alpha*beta
SqrtScalar h_sym(const SqrtScalar& s, const SqrtScalar& p, int m) {
    if (m < 0) return SqrtScalar(0);
    SqrtScalar prev(0), cur(1);
    for (int k = 1; k <= m; ++k) {
        SqrtScalar nxt = s * cur - p * prev;
        prev = cur;
        cur = nxt;
    }
    return cur;
}
}  // namespace

SqrtScalar whittaker_value(const PSParams& p, int m) {
    if (m < 0) return SqrtScalar(0);
    switch (p.kind) {
    case GroupKind::H:
        return SqrtScalar::half_power(p.ell, -m) * h_sym(p.sums[0], p.prods[0], m);
    case GroupKind::Inert:
        return SqrtScalar(rpow(Rational(p.ell), -m)) * h_sym(p.sums[0], p.prods[0], m);
    case GroupKind::Split:
        return SqrtScalar(rpow(Rational(p.ell), -m)) * h_sym(p.sums[0], p.prods[0], m) *
               h_sym(p.sums[1], p.prods[1], m);
    }
    return SqrtScalar(0);
}

SqrtScalar whittaker_U_action(const PSParams& p, int m) {
    if (m < 0) return SqrtScalar(0);
    long count = p.kind == GroupKind::H ? p.ell : static_cast<long>(p.ell) * p.ell;
    return SqrtScalar(count) * whittaker_value(p, m + 1);
}

CycloScalar whittaker_U_oracle(const PSParams& p, int m, const Rational& unit) {
    const int ell = p.ell;
    Rational y = unit * rpow(Rational(ell), m);
    CycloScalar phase(0);
    if (p.kind == GroupKind::Split) {
        LocalField F = LocalField::rational(ell);
        auto reps = coset_reps(F, 1);
        for (const auto& u : reps)
            for (const auto& v : reps)
                phase += additive_char(F, FieldElt(y * u.x)) * additive_char(F, FieldElt(-(y * v.x)));
    } else {
        LocalField F = p.field();
        for (const auto& u : coset_reps(F, 1)) phase += additive_char(F, F.mul(FieldElt(y), u));
    }
    return phase * CycloScalar(whittaker_value(p, m + 1));
}

// ------------------------------------------------------------ Siegel sections

std::optional<std::pair<int, SqrtScalar>> as_standard(const SchwartzFn& phi) {
    if (phi.is_zero() || phi.level() < 0) return std::nullopt;
    CycloScalar c = phi({0, 1});
    if (c.is_zero() || !c.is_base()) return std::nullopt;
    int t = phi.level();
    if (phi != standard_phi(StdFamily::PhiT, t, phi.ell()) * c) return std::nullopt;
    return std::make_pair(t, c.base());
}

bool is_k_invariant(const SchwartzFn& phi) { return k_average(phi) == phi; }

namespace {
struct BottomRow {
    int va, vd;
};

BottomRow iwasawa_vals(const MatQ& g, int ell, bool use_min) {
    int vd = use_min ? std::min(val(g.c, ell), val(g.d, ell)) : val(g.d, ell);
    return {val(g.det(), ell) - vd, vd};
}

RatFuncX ratio_r(const UnramChar& chi, const UnramChar& psi, int ell) {
    return chi.at_ell() / psi.at_ell() * RatFuncX(SqrtScalar(Rational(1, ell)));
}

RatFuncX borel_factor(const UnramChar& chi, const UnramChar& psi, int ell, BottomRow b) {
    return RatFuncX(SqrtScalar::half_power(ell, b.vd - b.va)) * chi.value(b.va) * psi.value(b.vd);
}
}  // namespace

RatFuncX siegel_value(const SchwartzFn& phi, const UnramChar& chi, const UnramChar& psi, const MatQ& g) {
    if (g.det() == 0) throw std::domain_error("singular group element");
    const int ell = phi.ell();
    if (phi.is_zero()) return RatFuncX();
    RatFuncX r = ratio_r(chi, psi, ell);
    if (auto st = as_standard(phi); st && st->first >= 1) {
        int t = st->first;
        if (g.d == 0) return RatFuncX();
        if (g.c != 0 && val(g.c, ell) - val(g.d, ell) < t) return RatFuncX();
        RatFuncX f1 = RatFuncX(1) - r;
        return RatFuncX(st->second) * borel_factor(chi, psi, ell, iwasawa_vals(g, ell, false)) * f1;
    }
    if (!is_k_invariant(phi)) throw UnsupportedSection("Siegel value needs phi_t or a GL2(Z_ell)-invariant function");
    // phi = sum_{j<N} a_j ch(shell_j) + a_N ch(ell^N Z^2), shell_j = L_j - L_{j+1}
    const int N = phi.level();
    int jmin = N;
    for (const auto& [p, c] : phi.terms()) jmin = std::min(jmin, point_val(p, ell));
    RatFuncX f1;
    for (int j = jmin; j < N; ++j) {
        CycloScalar a = phi({rpow(Rational(ell), j), 0});
        if (a.is_zero()) continue;
        f1 += RatFuncX(a.base()) * (r.pow(j) - r.pow(j + 1));
    }
    CycloScalar a0 = phi({0, 0});
    if (!a0.is_zero()) f1 += RatFuncX(a0.base()) * r.pow(N);
    return borel_factor(chi, psi, ell, iwasawa_vals(g, ell, true)) * f1;
}

SiegelSection intertwine_siegel(const SiegelSection& f) {
    const int ell = f.phi.ell();
    RatFuncX linv = RatFuncX(1) - ratio_r(f.chi, f.psi, ell);
    return {fourier(f.phi), f.psi, f.chi, f.scalar * linv};
}

Rational k0_volume(int ell, int t) {
    if (t <= 0) return 1;
    return Rational(1, ipow(ell, t - 1) * (ell + 1));
}

RatFuncX pairing_reduced(const SiegelSection& f, const RatFuncX& z1, int z_level) {
    int t;
    if (auto st = as_standard(f.phi)) {
        t = st->first;
    } else if (is_k_invariant(f.phi)) {
        t = 0;
    } else {
        throw UnsupportedSection("pairing reduction needs f|K supported on K_0(ell^t)");
    }
    if (t < z_level) throw UnsupportedSection("zeta functional is not constant on the support of f|K");
    return f.scalar * siegel_value(f.phi, f.chi, f.psi) * RatFuncX(SqrtScalar(k0_volume(f.phi.ell(), t))) * z1;
}

}  // namespace asai
