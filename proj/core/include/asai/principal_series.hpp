#pragma once

#include "asai/local_field.hpp"
#include "asai/scalar.hpp"
#include "asai/schwartz.hpp"

#include <optional>
#include <vector>

namespace asai {

struct UnsupportedSection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Unramified character: z -> (base * X^sexp)^{v(z)}.  chi_s = chi|.|^s has
// sexp = +1, psi_s = psi|.|^{-s} has sexp = -1.
struct UnramChar {
    SqrtScalar base{1};
    int sexp = 0;

    RatFuncX at_ell() const { return RatFuncX::monomial(base, sexp); }
    RatFuncX value(int v) const { return RatFuncX::monomial(base.pow(v), sexp * v); }
    UnramChar inverse() const { return {base.inverse(), -sexp}; }
    friend UnramChar operator*(const UnramChar& a, const UnramChar& b) {
        return {a.base * b.base, a.sexp + b.sexp};
    }
    UnramChar with_s(int e) const { return {base, e}; }
};

enum class GroupKind { H, Split, Inert };
const char* kind_name(GroupKind k);

// Unramified principal series data, kept as symmetric functions of each
// Satake pair: sums[i] = alpha_i + beta_i, prods[i] = alpha_i * beta_i.
struct PSParams {
    GroupKind kind = GroupKind::Inert;
    int ell = 2;
    std::vector<SqrtScalar> sums, prods;

    static PSParams from_roots(GroupKind kind, int ell, const std::vector<SqrtScalar>& roots);
    static PSParams symmetric(GroupKind kind, int ell, std::vector<SqrtScalar> sums, std::vector<SqrtScalar> prods);

    // chi_sigma(ell)
    SqrtScalar central() const;
    LocalField field() const;
    int pairs() const { return kind == GroupKind::Split ? 2 : 1; }
    std::string str() const;
};

// W(diag(y,1)) for v(y) = m, spherical vector normalized to 1 on units
SqrtScalar whittaker_value(const PSParams& p, int m);
// (U(ell) W)(diag(y,1)) in closed form
SqrtScalar whittaker_U_action(const PSParams& p, int m);
// the same from the coset decomposition: sum_u Psi(y u) W(diag(ell y, 1)),
// y = ell^m * unit
CycloScalar whittaker_U_oracle(const PSParams& p, int m, const Rational& unit = 1);

// Siegel section f_{phi, chi, psi} evaluated at g.  Supports c*phi_t and
// GL2(Z_ell)-invariant phi.
RatFuncX siegel_value(const SchwartzFn& phi, const UnramChar& chi, const UnramChar& psi, const MatQ& g = MatQ{});

struct SiegelSection {
    SchwartzFn phi;
    UnramChar chi, psi;
    RatFuncX scalar{1};
};

// M f_{phi, chi, psi} = L(chi psi^{-1}, 1+2s)^{-1} f_{phi^, psi, chi}
SiegelSection intertwine_siegel(const SiegelSection& f);

// vol(K_0(ell^t)) in GL2(Z_ell), total volume 1
Rational k0_volume(int ell, int t);

// phi == c * phi_t, returns (t, c)
std::optional<std::pair<int, SqrtScalar>> as_standard(const SchwartzFn& phi);
bool is_k_invariant(const SchwartzFn& phi);

// <f, z> when f|K is a multiple of ch(K_0(ell^t)) and z is constant on
// K_0(ell^z_level)
RatFuncX pairing_reduced(const SiegelSection& f, const RatFuncX& z1, int z_level = 0);

}  // namespace asai
