#include "asai/zeta.hpp"

namespace asai {

const char* tag_name(VecTag t) {
    switch (t) {
    case VecTag::Spherical: return "spherical";
    case VecTag::U: return "U";
    case VecTag::Borel: return "borel";
    }
    return "?";
}

RatFuncX abelian_linv(const SqrtScalar& chi_ell, int xpow) {
    Poly p(static_cast<size_t>(xpow) + 1, SqrtScalar(0));
    p[0] = SqrtScalar(1);
    p[xpow] = -chi_ell;
    return RatFuncX::poly(p);
}

namespace {
Poly asai_inverse_poly(const PSParams& p, const SqrtScalar& eta) {
    const SqrtScalar e2 = eta * eta;
    switch (p.kind) {
    case GroupKind::H:
        return {SqrtScalar(1), -p.sums[0] * eta, p.prods[0] * e2};
    case GroupKind::Inert:
        return poly::mul({SqrtScalar(1), -p.sums[0] * eta, p.prods[0] * e2},
                         {SqrtScalar(1), SqrtScalar(0), -p.prods[0] * e2});
    case GroupKind::Split: {
        const auto &s1 = p.sums[0], &s2 = p.sums[1], &p1 = p.prods[0], &p2 = p.prods[1];
        SqrtScalar e3 = e2 * eta, e4 = e2 * e2;
        return {SqrtScalar(1), -s1 * s2 * eta, (p1 * s2 * s2 + p2 * s1 * s1 - SqrtScalar(2) * p1 * p2) * e2,
                -p1 * p2 * s1 * s2 * e3, p1 * p1 * p2 * p2 * e4};
    }
    }
    return {SqrtScalar(1)};
}

RatFuncX spherical_closed(const PSParams& p, const SqrtScalar& eta) {
    return abelian_linv(p.central() * eta * eta, 2);
}

// mean over units u of the additive character restricted to Q_ell at u*x
SqrtScalar unit_mean_restricted(const PSParams& p, const Rational& x) {
    const int ell = p.ell;
    if (x == 0) return SqrtScalar(1);
    int k = std::max(1, -val(x, ell));
    long m = ipow(ell, k);
    LocalField Q = LocalField::rational(ell), F = p.field();
    CycloScalar acc(0);
    long count = 0;
    for (long u = 1; u < m; ++u) {
        if (u % ell == 0) continue;
        Rational ux = x * u;
        switch (p.kind) {
        case GroupKind::Inert: acc += additive_char(F, FieldElt(ux)); break;
        case GroupKind::Split: acc += additive_char(Q, FieldElt(ux)) * additive_char(Q, FieldElt(-ux)); break;
        case GroupKind::H: acc += additive_char(Q, FieldElt(ux)); break;
        }
        ++count;
    }
    return acc.base() * SqrtScalar(Rational(1, count));
}

LaurentSeries times_linv(const PSParams& p, const SqrtScalar& eta, int lo, const std::vector<SqrtScalar>& a) {
    Poly linv = asai_inverse_poly(p, eta);
    LaurentSeries out{lo, std::vector<SqrtScalar>(a.size(), SqrtScalar(0))};
    for (size_t k = 0; k < a.size(); ++k)
        for (size_t i = 0; i < linv.size() && i <= k; ++i) out.c[k] += linv[i] * a[k - i];
    return out;
}
}  // namespace

RatFuncX asai_lfactor(const PSParams& p, const SqrtScalar& eta) {
    return RatFuncX(Poly{SqrtScalar(1)}, asai_inverse_poly(p, eta));
}

RatFuncX zeta_closed(const PSParams& p, const SqrtScalar& eta, const ZetaVector& v) {
    RatFuncX sph = spherical_closed(p, eta);
    switch (v.tag) {
    case VecTag::Spherical: return sph;
    case VecTag::U: {
        RatFuncX linv = asai_lfactor(p, eta).inverse();
        return RatFuncX::monomial(SqrtScalar(p.ell) / eta, -1) * (sph - linv);
    }
    case VecTag::Borel: {
        int e = v.vd - v.va;
        SqrtScalar c = SqrtScalar(rpow(Rational(p.ell), e)) * p.central().pow(v.vd) * eta.pow(e);
        return RatFuncX::monomial(c, e) * sph;
    }
    }
    throw std::invalid_argument("unknown vector tag");
}

LaurentSeries zeta_oracle(const PSParams& p, const SqrtScalar& eta, const ZetaVector& v, int order) {
    const int ell = p.ell;
    int lo = v.tag == VecTag::Borel ? v.vd - v.va : 0;
    std::vector<SqrtScalar> a;
    for (int n = lo; n <= lo + order; ++n) {
        // shell v(y) = n contributes |y|^{s-1} eta(y) = (ell eta X)^n
        SqrtScalar w(rpow(Rational(ell), n));
        w *= eta.pow(n);
        switch (v.tag) {
        case VecTag::Spherical: w *= whittaker_value(p, n); break;
        case VecTag::U: w *= whittaker_U_action(p, n); break;
        case VecTag::Borel: {
            // W(diag(y,1)(a,b;0,d)) = chi_sigma(d) Psi(y b/d) W(diag(y a/d, 1))
            Rational x = rpow(Rational(ell), n - v.vd) * v.b;
            w *= p.central().pow(v.vd) * unit_mean_restricted(p, x) * whittaker_value(p, n + v.va - v.vd);
            break;
        }
        }
        a.push_back(w);
    }
    return times_linv(p, eta, lo, a);
}

LaurentSeries zeta_oracle_u_shifted(const PSParams& p, const SqrtScalar& eta, int order) {
    const int ell = p.ell;
    // spherical shells up to order+1, then y -> ell y removes shell 0
    std::vector<SqrtScalar> a;
    for (int n = 1; n <= order + 1; ++n)
        a.push_back(SqrtScalar(rpow(Rational(ell), n)) * eta.pow(n) * whittaker_value(p, n));
    SqrtScalar scale = SqrtScalar(ell) / eta;
    for (auto& x : a) x *= scale;
    return times_linv(p, eta, 0, a);
}

LaurentSeries zeta_closed_series(const PSParams& p, const SqrtScalar& eta, const ZetaVector& v, int order) {
    int lo = v.tag == VecTag::Borel ? v.vd - v.va : 0;
    return {lo, laurent_expand(zeta_closed(p, eta, v), lo, lo + order)};
}

void check_central(const PSParams& p, const SqrtScalar& chi, const SqrtScalar& psi) {
    if (chi * psi * p.central() != SqrtScalar(1))
        throw CentralMismatch("chi(ell) psi(ell) chi_sigma(ell) = " + (chi * psi * p.central()).str() + ", expected 1");
}

RatFuncX z_functional(const PSParams& p, const SqrtScalar& chi, const SqrtScalar& psi, VecTag tag) {
    check_central(p, chi, psi);
    if (tag == VecTag::Borel) throw std::invalid_argument("z functional is defined for spherical and U(ell) vectors");
    return zeta_closed(p, psi, {tag, 0, 0, 0}).scale_var(SqrtScalar::half_power(p.ell, -1));
}

FrakZParts frak_z_parts(const SqrtScalar& chi, const SqrtScalar& psi, const PSParams& p, int t, VecTag tag,
                        PairingRoute route) {
    check_central(p, chi, psi);
    const int ell = p.ell;
    if (chi / psi == SqrtScalar(ell)) throw DegenerateCharacters("chi psi^{-1} = |.|^{-1}");
    RatFuncX z1 = z_functional(p, chi, psi, tag);
    UnramChar chi_s{chi, 1}, psi_s{psi, -1};
    SchwartzFn phi = standard_phi(StdFamily::PhiT, t, ell);
    FrakZParts out;
    out.lfactor = abelian_linv(psi / chi * SqrtScalar(Rational(1, ell)), 2).inverse();
    if (route == PairingRoute::IntertwineSection) {
        SiegelSection sec = intertwine_siegel({fourier(phi), chi_s, psi_s, RatFuncX(1)});
        out.pairing = pairing_reduced(sec, z1, tag == VecTag::U ? 1 : 0);
    } else {
        if (tag != VecTag::Spherical) throw UnsupportedSection("the intertwined zeta route needs a spherical vector");
        RatFuncX mscalar = abelian_linv(chi / psi * SqrtScalar(Rational(1, ell)), 2);
        out.pairing = z1 * mscalar * siegel_value(k_average(fourier(phi)), chi_s, psi_s);
    }
    return out;
}

CycloScalar frak_z(const SqrtScalar& chi, const SqrtScalar& psi, const PSParams& p, int t, VecTag tag,
                   PairingRoute route) {
    FrakZParts parts = frak_z_parts(chi, psi, p, t, tag, route);
    return limit_product(parts.lfactor, parts.pairing).value;
}

}  // namespace asai
