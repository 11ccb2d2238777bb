#include "asai/scalar.hpp"

#include <algorithm>

namespace asai {

namespace poly {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), SqrtScalar(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, SqrtScalar(-1))); }

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, SqrtScalar(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, const SqrtScalar& c) {
    Poly r = a;
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Poly r = a;
    trim(r);
    if (r.size() < b.size()) return {Poly{}, r};
    Poly q(r.size() - b.size() + 1, SqrtScalar(0));
    SqrtScalar lead_inv = b.back().inverse();
    for (size_t k = q.size(); k-- > 0;) {
        SqrtScalar c = r[k + b.size() - 1] * lead_inv;
        q[k] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    }
    trim(q);
    r.resize(b.size() - 1);
    trim(r);
    return {q, r};
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = scale(a, a.back().inverse());
    return a;
}

SqrtScalar eval(const Poly& p, const SqrtScalar& x) {
    SqrtScalar r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

namespace {
std::string term(const SqrtScalar& c, int e, const std::string& var, bool first) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
    std::string mag = neg ? cs.substr(1) : cs;
    if (!c.is_rational() && c.rat() != 0) mag = "(" + cs + ")", neg = false;
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    std::string body;
    if (e == 0) body = mag;
    else if (mag == "1") body = mono;
    else body = mag + "*" + mono;
    if (first) return (neg ? "-" : "") + body;
    return (neg ? " - " : " + ") + body;
}
}  // namespace

std::string str_shifted(const Poly& p, int shift, const std::string& var) {
    if (p.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        s += term(p[i], static_cast<int>(i) + shift, var, s.empty());
    }
    return s;
}

std::string str(const Poly& p, const std::string& var) { return str_shifted(p, 0, var); }

}  // namespace poly

// ------------------------------------------------------------------ RatFuncX

RatFuncX::RatFuncX(const SqrtScalar& c) : num_{c}, den_{SqrtScalar(1)} { reduce(); }

RatFuncX::RatFuncX(Poly num, Poly den, int shift) : num_(std::move(num)), den_(std::move(den)), shift_(shift) {
    reduce();
}

RatFuncX RatFuncX::monomial(const SqrtScalar& c, int k) { return RatFuncX(Poly{c}, Poly{SqrtScalar(1)}, k); }

RatFuncX RatFuncX::laurent(int lo, const std::vector<SqrtScalar>& c) { return RatFuncX(c, Poly{SqrtScalar(1)}, lo); }

void RatFuncX::reduce() {
    poly::trim(num_);
    poly::trim(den_);
    if (den_.empty()) throw std::domain_error("zero denominator");
    if (num_.empty()) {
        den_ = {SqrtScalar(1)};
        shift_ = 0;
        return;
    }
    auto lead_zeros = [](const Poly& p) {
        size_t k = 0;
        while (p[k].is_zero()) ++k;
        return k;
    };
    size_t kn = lead_zeros(num_), kd = lead_zeros(den_);
    num_.erase(num_.begin(), num_.begin() + static_cast<long>(kn));
    den_.erase(den_.begin(), den_.begin() + static_cast<long>(kd));
    shift_ += static_cast<int>(kn) - static_cast<int>(kd);
    if (den_.size() > 1 && num_.size() > 1) {
        Poly g = poly::gcd(num_, den_);
        if (g.size() > 1) {
            num_ = poly::divmod(num_, g).first;
            den_ = poly::divmod(den_, g).first;
        }
    }
    SqrtScalar c = den_[0].inverse();
    num_ = poly::scale(num_, c);
    den_ = poly::scale(den_, c);
}

RatFuncX RatFuncX::operator-() const {
    RatFuncX r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

RatFuncX& RatFuncX::operator+=(const RatFuncX& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int m = std::min(shift_, o.shift_);
    Poly a = poly::mul(num_, o.den_), b = poly::mul(o.num_, den_);
    a.insert(a.begin(), static_cast<size_t>(shift_ - m), SqrtScalar(0));
    b.insert(b.begin(), static_cast<size_t>(o.shift_ - m), SqrtScalar(0));
    num_ = poly::add(a, b);
    den_ = poly::mul(den_, o.den_);
    shift_ = m;
    reduce();
    return *this;
}

RatFuncX& RatFuncX::operator-=(const RatFuncX& o) { return *this += -o; }

RatFuncX& RatFuncX::operator*=(const RatFuncX& o) {
    num_ = poly::mul(num_, o.num_);
    den_ = poly::mul(den_, o.den_);
    shift_ += o.shift_;
    reduce();
    return *this;
}

RatFuncX RatFuncX::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFuncX(den_, num_, -shift_);
}

RatFuncX& RatFuncX::operator/=(const RatFuncX& o) { return *this *= o.inverse(); }

RatFuncX RatFuncX::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFuncX r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

RatFuncX RatFuncX::scale_var(const SqrtScalar& c) const {
    if (is_zero()) return *this;
    Poly n = num_, d = den_;
    SqrtScalar ck(1);
    for (size_t i = 0; i < std::max(n.size(), d.size()); ++i) {
        if (i < n.size()) n[i] *= ck;
        if (i < d.size()) d[i] *= ck;
        ck *= c;
    }
    n = poly::scale(n, c.pow(shift_));
    return RatFuncX(n, d, shift_);
}

namespace poly {
std::string str_shifted(const Poly& p, int shift, const std::string& var);
}

std::string RatFuncX::str() const {
    std::string n = poly::str_shifted(num_, shift_, "X");
    if (is_polynomial()) return n;
    return "(" + n + ")/(" + poly::str(den_) + ")";
}

// ---------------------------------------------------------------- evaluation

namespace {
// power series of num/den, den(0) == 1
std::vector<SqrtScalar> quotient_series(const Poly& num, const Poly& den, int len) {
    std::vector<SqrtScalar> s(static_cast<size_t>(std::max(len, 0)), SqrtScalar(0));
    for (int k = 0; k < len; ++k) {
        SqrtScalar v = k < static_cast<int>(num.size()) ? num[k] : SqrtScalar(0);
        for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j) v -= den[j] * s[k - j];
        s[k] = v;
    }
    return s;
}
}  // namespace

std::vector<SqrtScalar> series_expand(const RatFuncX& f, int order) {
    if (f.shift() < 0) throw PoleAtOrigin("series expansion of a function with a pole at X = 0");
    return laurent_expand(f, 0, order);
}

std::vector<SqrtScalar> laurent_expand(const RatFuncX& f, int lo, int hi) {
    std::vector<SqrtScalar> out(static_cast<size_t>(std::max(hi - lo + 1, 0)), SqrtScalar(0));
    if (f.is_zero()) return out;
    auto s = quotient_series(f.num(), f.den(), hi - f.shift() + 1);
    for (int k = lo; k <= hi; ++k) {
        int j = k - f.shift();
        if (j >= 0) out[k - lo] = s[j];
    }
    return out;
}

CycloScalar eval_at(const RatFuncX& f, const SqrtScalar& x0) {
    if (f.is_zero()) return CycloScalar(0);
    SqrtScalar d = poly::eval(f.den(), x0);
    if (d.is_zero()) throw PoleAtPoint("pole at X = " + x0.str());
    if (x0.is_zero()) {
        if (f.shift() < 0) throw PoleAtPoint("pole at X = 0");
        if (f.shift() > 0) return CycloScalar(0);
        return CycloScalar(f.num()[0]);
    }
    return CycloScalar(x0.pow(f.shift()) * poly::eval(f.num(), x0) / d);
}

namespace {
int root_mult_at_one(Poly p) {
    const Poly x_minus_1{SqrtScalar(-1), SqrtScalar(1)};
    int k = 0;
    while (!p.empty() && poly::eval(p, SqrtScalar(1)).is_zero()) {
        p = poly::divmod(p, x_minus_1).first;
        ++k;
    }
    return k;
}
}  // namespace

int order_at_one(const RatFuncX& f) {
    if (f.is_zero()) return kInfVal;
    return root_mult_at_one(f.num()) - root_mult_at_one(f.den());
}

LimitResult limit_product(const RatFuncX& a, const RatFuncX& b) {
    LimitResult r;
    r.order_a = order_at_one(a);
    r.order_b = order_at_one(b);
    r.value = eval_at(a * b, SqrtScalar(1));
    return r;
}

}  // namespace asai
