#pragma once

#include <gmpxx.h>

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace asai {

using Rational = mpq_class;

constexpr int kInfVal = INT_MAX;

struct PoleAtOrigin : std::domain_error {
    using std::domain_error::domain_error;
};
struct PoleAtPoint : std::domain_error {
    using std::domain_error::domain_error;
};
struct PrimeMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// ell-adic valuation of a rational; kInfVal for zero.
int val(const Rational& r, int ell);
Rational rpow(const Rational& b, long e);
long ipow(long b, int e);
std::string to_string(const Rational& r);

// a + b*sqrt(p).  prime == 0 marks a value that never carried a surd part.
class SqrtScalar {
public:
    SqrtScalar() = default;
    SqrtScalar(long v) : a_(v) {}
    SqrtScalar(const Rational& a) : a_(a) {}
    SqrtScalar(const Rational& a, const Rational& b, int prime);

    static SqrtScalar sqrt_prime(int p) { return SqrtScalar(0, 1, p); }
    // p^(k/2), exact
    static SqrtScalar half_power(int p, long k);

    const Rational& rat() const { return a_; }
    const Rational& surd() const { return b_; }
    int prime() const { return p_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    SqrtScalar operator-() const;
    SqrtScalar& operator+=(const SqrtScalar& o);
    SqrtScalar& operator-=(const SqrtScalar& o);
    SqrtScalar& operator*=(const SqrtScalar& o);
    SqrtScalar& operator/=(const SqrtScalar& o);
    SqrtScalar inverse() const;
    SqrtScalar pow(long e) const;

    friend SqrtScalar operator+(SqrtScalar x, const SqrtScalar& y) { return x += y; }
    friend SqrtScalar operator-(SqrtScalar x, const SqrtScalar& y) { return x -= y; }
    friend SqrtScalar operator*(SqrtScalar x, const SqrtScalar& y) { return x *= y; }
    friend SqrtScalar operator/(SqrtScalar x, const SqrtScalar& y) { return x /= y; }
    friend bool operator==(const SqrtScalar& x, const SqrtScalar& y);
    friend bool operator!=(const SqrtScalar& x, const SqrtScalar& y) { return !(x == y); }

    std::string str() const;

private:
    int merge_prime(const SqrtScalar& o) const;
    Rational a_{0}, b_{0};
    int p_ = 0;
};

// Element of Q(sqrt ell)[x]/Phi_{ell^n}.  Always stored at the smallest
// conductor that holds it; ell == 0 means conductor 1.
class CycloScalar {
public:
    CycloScalar() : c_{SqrtScalar(0)} {}
    CycloScalar(const SqrtScalar& s) : c_{s} {}
    CycloScalar(long v) : c_{SqrtScalar(v)} {}

    // zeta_{ell^n}^k
    static CycloScalar root_of_unity(int ell, int n, long k);
    // sum of full[k] zeta_{ell^n}^k, full.size() == ell^n
    static CycloScalar from_powers(int ell, int n, std::vector<SqrtScalar> full);

    int ell() const { return ell_; }
    int exponent() const { return n_; }
    long conductor() const { return n_ == 0 ? 1 : ipow(ell_, n_); }
    const std::vector<SqrtScalar>& coeffs() const { return c_; }

    bool is_base() const { return n_ == 0; }
    bool is_zero() const { return n_ == 0 && c_[0].is_zero(); }
    // only valid when is_base()
    const SqrtScalar& base() const;

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    friend CycloScalar operator+(CycloScalar x, const CycloScalar& y) { return x += y; }
    friend CycloScalar operator-(CycloScalar x, const CycloScalar& y) { return x -= y; }
    friend CycloScalar operator*(CycloScalar x, const CycloScalar& y) { return x *= y; }
    friend bool operator==(const CycloScalar& x, const CycloScalar& y) {
        return x.ell_ == y.ell_ && x.n_ == y.n_ && x.c_ == y.c_;
    }
    friend bool operator!=(const CycloScalar& x, const CycloScalar& y) { return !(x == y); }

    std::string str() const;

private:
    CycloScalar lifted(int ell, int n) const;
    void normalize();
    // reduce a vector indexed mod ell^n into the Phi_{ell^n} basis
    static std::vector<SqrtScalar> reduce(std::vector<SqrtScalar> full, int ell, int n);

    int ell_ = 0;
    int n_ = 0;
    std::vector<SqrtScalar> c_;
};

// Sum of zeta_{ell^n}^{a_i}.
CycloScalar cyclo_sum(int ell, int n, const std::vector<long>& exponents);

using Poly = std::vector<SqrtScalar>;  // low degree first, trimmed

// X^shift * num(X) / den(X), den(0) == 1, gcd(num, den) == 1, num(0) != 0
// unless num is zero.
class RatFuncX {
public:
    RatFuncX() : num_{}, den_{SqrtScalar(1)} {}
    RatFuncX(const SqrtScalar& c);
    RatFuncX(long c) : RatFuncX(SqrtScalar(c)) {}
    RatFuncX(Poly num, Poly den, int shift = 0);

    static RatFuncX monomial(const SqrtScalar& c, int k);
    static RatFuncX poly(Poly p) { return RatFuncX(std::move(p), Poly{SqrtScalar(1)}); }
    // Laurent polynomial sum c_k X^k for k = lo..lo+len-1
    static RatFuncX laurent(int lo, const std::vector<SqrtScalar>& c);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int shift() const { return shift_; }
    bool is_zero() const { return num_.empty(); }
    bool is_polynomial() const { return den_.size() == 1; }

    RatFuncX operator-() const;
    RatFuncX& operator+=(const RatFuncX& o);
    RatFuncX& operator-=(const RatFuncX& o);
    RatFuncX& operator*=(const RatFuncX& o);
    RatFuncX& operator/=(const RatFuncX& o);
    RatFuncX inverse() const;
    RatFuncX pow(int e) const;
    friend RatFuncX operator+(RatFuncX x, const RatFuncX& y) { return x += y; }
    friend RatFuncX operator-(RatFuncX x, const RatFuncX& y) { return x -= y; }
    friend RatFuncX operator*(RatFuncX x, const RatFuncX& y) { return x *= y; }
    friend RatFuncX operator/(RatFuncX x, const RatFuncX& y) { return x /= y; }
    friend bool operator==(const RatFuncX& x, const RatFuncX& y) {
        return x.shift_ == y.shift_ && x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const RatFuncX& x, const RatFuncX& y) { return !(x == y); }

    // X -> c X
    RatFuncX scale_var(const SqrtScalar& c) const;

    std::string str() const;

private:
    void reduce();
    Poly num_;
    Poly den_;
    int shift_ = 0;
};

namespace poly {
void trim(Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const SqrtScalar& c);
// returns {quotient, remainder}
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
SqrtScalar eval(const Poly& p, const SqrtScalar& x);
std::string str(const Poly& p, const std::string& var = "X");
}  // namespace poly

std::vector<SqrtScalar> series_expand(const RatFuncX& f, int order);
// coefficients of X^lo .. X^hi; requires lo <= shift-free valuation
std::vector<SqrtScalar> laurent_expand(const RatFuncX& f, int lo, int hi);
CycloScalar eval_at(const RatFuncX& f, const SqrtScalar& x0);

struct LimitResult {
    CycloScalar value;
    int order_a = 0;  // order of vanishing at X=1 (negative for poles)
    int order_b = 0;
};
LimitResult limit_product(const RatFuncX& a, const RatFuncX& b);
// order of vanishing at X = 1
int order_at_one(const RatFuncX& f);

}  // namespace asai
