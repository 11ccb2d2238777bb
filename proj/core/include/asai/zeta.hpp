#pragma once

#include "asai/principal_series.hpp"
#include "asai/scalar.hpp"

#include <vector>

namespace asai {

struct CentralMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateCharacters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class VecTag { Spherical, U, Borel };
const char* tag_name(VecTag t);

// Spherical vector, its U(ell) translate, or its translate by (a, b; 0, d)
// with a = ell^va, d = ell^vd.
struct ZetaVector {
    VecTag tag = VecTag::Spherical;
    int va = 0, vd = 0;
    Rational b{0};

    static ZetaVector spherical() { return {}; }
    static ZetaVector u_ell() { return {VecTag::U, 0, 0, 0}; }
    static ZetaVector borel(int va, int vd, const Rational& b = 0) { return {VecTag::Borel, va, vd, b}; }
};

// L(as(sigma x eta), s) in X = ell^{-s}; eta enters through its value at ell
RatFuncX asai_lfactor(const PSParams& p, const SqrtScalar& eta);
// L(chi, s)^{-1} = 1 - chi(ell) X for an unramified character value
RatFuncX abelian_linv(const SqrtScalar& chi_ell, int xpow = 1);

// Z(W, eta, s) / L(as(sigma x eta), s)
RatFuncX zeta_closed(const PSParams& p, const SqrtScalar& eta, const ZetaVector& v);

struct LaurentSeries {
    int lo = 0;
    std::vector<SqrtScalar> c;  // coefficients of X^lo, X^{lo+1}, ...
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) { return a.lo == b.lo && a.c == b.c; }
};

// shell sums of the defining integral times the truncated inverse L-factor,
// coefficients of X^lo .. X^{lo+order}
LaurentSeries zeta_oracle(const PSParams& p, const SqrtScalar& eta, const ZetaVector& v, int order);
// the U(ell) integral written over y' = ell y; must equal the U oracle
LaurentSeries zeta_oracle_u_shifted(const PSParams& p, const SqrtScalar& eta, int order);
// closed form expanded on the same window as the oracle
LaurentSeries zeta_closed_series(const PSParams& p, const SqrtScalar& eta, const ZetaVector& v, int order);

// z_{s, v}(1) with eta = psi and s shifted by 1/2
RatFuncX z_functional(const PSParams& p, const SqrtScalar& chi, const SqrtScalar& psi, VecTag tag);

enum class PairingRoute { IntertwineSection, IntertwineZeta };

// frak z_{chi, psi}(F_{phi_t} x v) for t in {0, 1}, as the limit s -> 0
CycloScalar frak_z(const SqrtScalar& chi, const SqrtScalar& psi, const PSParams& p, int t, VecTag tag,
                   PairingRoute route = PairingRoute::IntertwineSection);

// the product before the limit, exposed for pole bookkeeping
struct FrakZParts {
    RatFuncX lfactor;  // L(psi/chi, 2s+1)
    RatFuncX pairing;
};
FrakZParts frak_z_parts(const SqrtScalar& chi, const SqrtScalar& psi, const PSParams& p, int t, VecTag tag,
                        PairingRoute route = PairingRoute::IntertwineSection);

void check_central(const PSParams& p, const SqrtScalar& chi, const SqrtScalar& psi);

}  // namespace asai
