#pragma once

#include "asai/scalar.hpp"

#include <string>
#include <vector>

namespace asai {

// x + y*delta.  For Q_ell only x is used.
struct FieldElt {
    Rational x{0}, y{0};

    FieldElt() = default;
    FieldElt(long v) : x(v) {}
    FieldElt(const Rational& a) : x(a) {}
    FieldElt(const Rational& a, const Rational& b) : x(a), y(b) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational() const { return y == 0; }

    friend FieldElt operator+(const FieldElt& a, const FieldElt& b) { return {a.x + b.x, a.y + b.y}; }
    friend FieldElt operator-(const FieldElt& a, const FieldElt& b) { return {a.x - b.x, a.y - b.y}; }
    friend FieldElt operator-(const FieldElt& a) { return {-a.x, -a.y}; }
    friend bool operator==(const FieldElt& a, const FieldElt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const FieldElt& a, const FieldElt& b) { return !(a == b); }
    friend bool operator<(const FieldElt& a, const FieldElt& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }

    std::string str() const;
};

// Q_ell (degree 1) or its unramified quadratic extension (degree 2),
// E = Q_ell + Q_ell*delta with delta^2 = dp*delta + dq.
struct LocalField {
    int ell = 2;
    int degree = 1;
    Rational dp{0}, dq{0};

    static LocalField rational(int ell);
    static LocalField unramified(int ell);

    long q() const { return degree == 1 ? ell : static_cast<long>(ell) * ell; }

    FieldElt mul(const FieldElt& a, const FieldElt& b) const;
    FieldElt inv(const FieldElt& a) const;
    FieldElt div(const FieldElt& a, const FieldElt& b) const { return mul(a, inv(b)); }
    FieldElt pow(const FieldElt& a, long e) const;
    FieldElt delta() const { return {0, 1}; }

    Rational norm(const FieldElt& a) const;
    Rational trace(const FieldElt& a) const;
    // min(v(x), v(y)); kInfVal for zero
    int valuation(const FieldElt& a) const;
    // |a| = ell^abs_exponent(a)
    int abs_exponent(const FieldElt& a) const { return -degree * valuation(a); }
    bool integral(const FieldElt& a) const { return valuation(a) >= 0; }
    bool unit(const FieldElt& a) const { return valuation(a) == 0; }

    // reduce an integral element's coordinates into [0, ell^n)
    FieldElt reduce_mod(const FieldElt& a, int n) const;

    std::string str() const;
};

// e_ell(r) = exp(2 pi i {r}_ell)
CycloScalar e_ell(const Rational& r, int ell);
// l-adic fractional part with ell-power denominator, as (numerator, k) meaning c/ell^k
std::pair<long, int> frac_part(const Rational& r, int ell);
// residue of an ell-integral rational modulo ell^n in [0, ell^n)
long residue(const Rational& r, int ell, int n);

// Psi(z) = e_ell(tr(delta^{-1} z)) for E, e_ell(z) for Q_ell
CycloScalar additive_char(const LocalField& F, const FieldElt& z);

// mean of Psi(z / ell^k) over the unit group, unit-group volume 1
SqrtScalar unit_shell_integral(const LocalField& F, int k);

// representatives of O / ell^n O
std::vector<FieldElt> coset_reps(const LocalField& F, int n);

}  // namespace asai
