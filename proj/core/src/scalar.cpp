#include "asai/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace asai {

int val(const Rational& r, int ell) {
    if (r == 0) return kInfVal;
    mpz_class p = ell, t;
    mpz_class num = r.get_num(), den = r.get_den();
    long v = static_cast<long>(mpz_remove(t.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    v -= static_cast<long>(mpz_remove(t.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    return static_cast<int>(v);
}

Rational rpow(const Rational& b, long e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("zero to a negative power");
        Rational inv = 1 / b;
        return rpow(inv, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), b.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), b.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------- SqrtScalar

SqrtScalar::SqrtScalar(const Rational& a, const Rational& b, int prime) : a_(a), b_(b), p_(prime) {
    if (b_ != 0 && p_ == 0) throw std::invalid_argument("surd part needs a prime");
}

SqrtScalar SqrtScalar::half_power(int p, long k) {
    long q = (k >= 0) ? k / 2 : -((-k + 1) / 2);
    Rational base = rpow(Rational(p), q);
    if (k - 2 * q == 0) return SqrtScalar(base, 0, p);
    return SqrtScalar(0, base, p);
}

int SqrtScalar::merge_prime(const SqrtScalar& o) const {
    if (p_ == 0) return o.p_;
    if (o.p_ == 0 || o.p_ == p_) return p_;
    if (b_ != 0 || o.b_ != 0) throw PrimeMismatch("mixing square roots of different primes");
    return p_;
}

SqrtScalar SqrtScalar::operator-() const { return SqrtScalar(-a_, -b_, p_); }

SqrtScalar& SqrtScalar::operator+=(const SqrtScalar& o) {
    p_ = merge_prime(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

SqrtScalar& SqrtScalar::operator-=(const SqrtScalar& o) {
    p_ = merge_prime(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

SqrtScalar& SqrtScalar::operator*=(const SqrtScalar& o) {
    int p = merge_prime(o);
    Rational a = a_ * o.a_;
    if (b_ != 0 && o.b_ != 0) a += b_ * o.b_ * p;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    p_ = p;
    return *this;
}

SqrtScalar SqrtScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (b_ == 0) return SqrtScalar(1 / a_, 0, p_);
    Rational n = a_ * a_ - b_ * b_ * p_;
    return SqrtScalar(a_ / n, -b_ / n, p_);
}

SqrtScalar& SqrtScalar::operator/=(const SqrtScalar& o) { return *this *= o.inverse(); }

SqrtScalar SqrtScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    SqrtScalar r(1), b = *this;
    r.p_ = p_;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool operator==(const SqrtScalar& x, const SqrtScalar& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_ == 0 || x.p_ == y.p_;
}

std::string SqrtScalar::str() const {
    if (b_ == 0) return a_.get_str();
    std::string s = (b_ == 1) ? "" : (b_ == -1 ? "-" : b_.get_str() + "*");
    s += "sqrt(" + std::to_string(p_) + ")";
    if (a_ == 0) return s;
    if (s[0] == '-') return a_.get_str() + s;
    return a_.get_str() + "+" + s;
}

// --------------------------------------------------------------- CycloScalar

static long phi_pp(int ell, int n) { return n == 0 ? 1 : ipow(ell, n - 1) * (ell - 1); }

std::vector<SqrtScalar> CycloScalar::reduce(std::vector<SqrtScalar> full, int ell, int n) {
    long N = ipow(ell, n), m = ipow(ell, n - 1), d = N - m;
    for (long k = N - 1; k >= d; --k) {
        if (full[k].is_zero()) continue;
        SqrtScalar c = full[k];
        full[k] = SqrtScalar(0);
        for (int i = 0; i <= ell - 2; ++i) full[k - d + i * m] -= c;
    }
    full.resize(d);
    return full;
}

CycloScalar CycloScalar::from_powers(int ell, int n, std::vector<SqrtScalar> full) {
    if (n == 0) return CycloScalar(full.at(0));
    CycloScalar r;
    r.ell_ = ell;
    r.n_ = n;
    r.c_ = reduce(std::move(full), ell, n);
    r.normalize();
    return r;
}

CycloScalar CycloScalar::root_of_unity(int ell, int n, long k) {
    CycloScalar r;
    if (n == 0) return r = CycloScalar(1);
    long N = ipow(ell, n);
    k %= N;
    if (k < 0) k += N;
    std::vector<SqrtScalar> full(N, SqrtScalar(0));
    full[k] = SqrtScalar(1);
    r.ell_ = ell;
    r.n_ = n;
    r.c_ = reduce(std::move(full), ell, n);
    r.normalize();
    return r;
}

void CycloScalar::normalize() {
    while (n_ > 0) {
        bool down = true;
        for (size_t i = 0; i < c_.size() && down; ++i) {
            if (c_[i].is_zero()) continue;
            if (n_ == 1 ? i != 0 : i % ell_ != 0) down = false;
        }
        if (!down) break;
        if (n_ == 1) {
            c_.resize(1);
        } else {
            std::vector<SqrtScalar> nc(phi_pp(ell_, n_ - 1));
            for (size_t i = 0; i < nc.size(); ++i) nc[i] = c_[i * ell_];
            c_ = std::move(nc);
        }
        --n_;
    }
    if (n_ == 0) ell_ = 0;
}

CycloScalar CycloScalar::lifted(int ell, int n) const {
    if (n == n_) return *this;
    CycloScalar r;
    r.ell_ = ell;
    r.n_ = n;
    r.c_.assign(phi_pp(ell, n), SqrtScalar(0));
    long f = (n_ == 0) ? 0 : ipow(ell, n - n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * f] += c_[i];
    return r;
}

const SqrtScalar& CycloScalar::base() const {
    if (!is_base()) throw std::logic_error("cyclotomic value is not in the base field: " + str());
    return c_[0];
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

namespace {
std::pair<int, int> common(const CycloScalar& a, const CycloScalar& b) {
    if (a.ell() && b.ell() && a.ell() != b.ell())
        throw PrimeMismatch("cyclotomic values of different residue characteristic");
    return {a.ell() ? a.ell() : b.ell(), std::max(a.exponent(), b.exponent())};
}
}  // namespace

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    auto [ell, n] = common(*this, o);
    CycloScalar x = lifted(ell, n), y = o.lifted(ell, n);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    x.normalize();
    return *this = x;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
    auto [ell, n] = common(*this, o);
    if (n == 0) {
        c_[0] *= o.c_[0];
        return *this;
    }
    CycloScalar x = lifted(ell, n), y = o.lifted(ell, n);
    long N = ipow(ell, n);
    std::vector<SqrtScalar> full(N, SqrtScalar(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].is_zero()) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j].is_zero()) continue;
            full[(i + j) % N] += x.c_[i] * y.c_[j];
        }
    }
    x.c_ = reduce(std::move(full), ell, n);
    x.normalize();
    return *this = x;
}

std::string CycloScalar::str() const {
    if (is_base()) return c_[0].str();
    std::string s;
    std::string z = "z" + std::to_string(conductor());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string c = c_[i].str();
        if (i == 0) {
            s += c;
        } else {
            if (c != "1") s += "(" + c + ")*";
            s += z + (i == 1 ? "" : "^" + std::to_string(i));
        }
    }
    return s;
}

CycloScalar cyclo_sum(int ell, int n, const std::vector<long>& exponents) {
    if (n == 0) return CycloScalar(static_cast<long>(exponents.size()));
    long N = ipow(ell, n);
    std::vector<SqrtScalar> full(N, SqrtScalar(0));
    for (long e : exponents) {
        long k = e % N;
        if (k < 0) k += N;
        full[k] += SqrtScalar(1);
    }
    return CycloScalar::from_powers(ell, n, std::move(full));
}

}  // namespace asai
