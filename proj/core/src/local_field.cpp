#include "asai/local_field.hpp"

#include <algorithm>

namespace asai {

std::string FieldElt::str() const {
    if (y == 0) return x.get_str();
    std::string d = (y == 1) ? "d" : (y == -1 ? "-d" : y.get_str() + "*d");
    if (x == 0) return d;
    return x.get_str() + (d[0] == '-' ? "" : "+") + d;
}

namespace {
bool is_square_mod(long a, long p) {
    for (long x = 0; x < p; ++x)
        if ((x * x - a) % p == 0) return true;
    return false;
}
}  // namespace

LocalField LocalField::rational(int ell) {
    LocalField F;
    F.ell = ell;
    F.degree = 1;
    return F;
}

LocalField LocalField::unramified(int ell) {
    LocalField F;
    F.ell = ell;
    F.degree = 2;
    if (ell == 2) {
        // delta^2 + delta + 1 = 0
        F.dp = -1;
        F.dq = -1;
    } else {
        long d = 2;
        while (is_square_mod(d, ell)) ++d;
        F.dp = 0;
        F.dq = d;
    }
    return F;
}

FieldElt LocalField::mul(const FieldElt& a, const FieldElt& b) const {
    if (degree == 1) return {a.x * b.x, 0};
    Rational yy = a.y * b.y;
    return {a.x * b.x + yy * dq, a.x * b.y + a.y * b.x + yy * dp};
}

Rational LocalField::norm(const FieldElt& a) const {
    if (degree == 1) return a.x;
    // (x + y d)(x + y d'), d + d' = dp, d d' = -dq
    return a.x * a.x + dp * a.x * a.y - dq * a.y * a.y;
}

Rational LocalField::trace(const FieldElt& a) const {
    if (degree == 1) return a.x;
    return 2 * a.x + dp * a.y;
}

FieldElt LocalField::inv(const FieldElt& a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero field element");
    if (degree == 1) return {1 / a.x, 0};
    Rational n = norm(a);
    // conjugate of x + y d is (x + y dp) - y d
    return {(a.x + a.y * dp) / n, -a.y / n};
}

FieldElt LocalField::pow(const FieldElt& a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    FieldElt r(1), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int LocalField::valuation(const FieldElt& a) const {
    return std::min(val(a.x, ell), val(a.y, ell));
}

long residue(const Rational& r, int ell, int n) {
    long m = ipow(ell, n);
    if (m == 1) {
        if (val(r, ell) < 0) throw std::domain_error("residue of a non-integral rational");
        return 0;
    }
    mpz_class M = m, num = r.get_num(), den = r.get_den(), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t()) == 0)
        throw std::domain_error("residue of a non-integral rational");
    mpz_class res = num * inv;
    mpz_class out;
    mpz_mod(out.get_mpz_t(), res.get_mpz_t(), M.get_mpz_t());
    return out.get_si();
}

FieldElt LocalField::reduce_mod(const FieldElt& a, int n) const {
    return {residue(a.x, ell, n), degree == 1 ? 0 : residue(a.y, ell, n)};
}

std::string LocalField::str() const {
    if (degree == 1) return "Q_" + std::to_string(ell);
    return "E_" + std::to_string(ell) + "(d^2=" + dp.get_str() + "d+" + dq.get_str() + ")";
}

std::pair<long, int> frac_part(const Rational& r, int ell) {
    int v = val(r, ell);
    if (v >= 0) return {0, 0};
    int k = -v;
    // r = a / (ell^k d'), gcd(d', ell) = 1
    Rational scaled = r * rpow(Rational(ell), k);
    long c = residue(scaled, ell, k);
    return {c, k};
}

CycloScalar e_ell(const Rational& r, int ell) {
    auto [c, k] = frac_part(r, ell);
    if (k == 0) return CycloScalar(1);
    return CycloScalar::root_of_unity(ell, k, c);
}

CycloScalar additive_char(const LocalField& F, const FieldElt& z) {
    if (F.degree == 1) return e_ell(z.x, F.ell);
    FieldElt dinv = F.inv(F.delta());
    return e_ell(F.trace(F.mul(dinv, z)), F.ell);
}

SqrtScalar unit_shell_integral(const LocalField& F, int k) {
    if (k <= 0) return SqrtScalar(1);
    if (k == 1) return SqrtScalar(Rational(-1, F.q() - 1));
    return SqrtScalar(0);
}

std::vector<FieldElt> coset_reps(const LocalField& F, int n) {
    long m = ipow(F.ell, n);
    std::vector<FieldElt> out;
    if (F.degree == 1) {
        for (long i = 0; i < m; ++i) out.emplace_back(i);
        return out;
    }
    for (long j = 0; j < m; ++j)
        for (long i = 0; i < m; ++i) out.emplace_back(Rational(i), Rational(j));
    return out;
}

}  // namespace asai
