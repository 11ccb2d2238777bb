#include "asai/schwartz.hpp"

#include <algorithm>
#include <set>

namespace asai {

MatQ MatQ::inverse() const {
    Rational D = det();
    if (D == 0) throw std::domain_error("singular matrix");
    return {d / D, -b / D, -c / D, a / D};
}

int MatQ::min_val(int ell) const {
    return std::min({val(a, ell), val(b, ell), val(c, ell), val(d, ell)});
}

std::string MatQ::str() const {
    return "[" + a.get_str() + "," + b.get_str() + ";" + c.get_str() + "," + d.get_str() + "]";
}

Rational reduce_coord(const Rational& r, int ell, int n) {
    if (r == 0) return 0;
    int v = val(r, ell);
    if (v >= n) return 0;
    int k = std::max(0, -v);
    Rational s = r * rpow(Rational(ell), k);
    Rational out(residue(s, ell, n + k));
    return out / rpow(Rational(ell), k);
}

Point reduce_point(const Point& p, int ell, int n) {
    return {reduce_coord(p.first, ell, n), reduce_coord(p.second, ell, n)};
}

int point_val(const Point& p, int ell) { return std::min(val(p.first, ell), val(p.second, ell)); }

SchwartzFn SchwartzFn::coset(int ell, const Point& p, int n, const CycloScalar& c) {
    std::map<Point, CycloScalar> t;
    t[reduce_point(p, ell, n)] = c;
    return from_terms(ell, n, std::move(t));
}

SchwartzFn SchwartzFn::from_terms(int ell, int level, std::map<Point, CycloScalar> terms) {
    SchwartzFn f(ell);
    f.level_ = level;
    f.terms_ = std::move(terms);
    f.canonicalize();
    return f;
}

void SchwartzFn::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    if (terms_.empty()) {
        level_ = 0;
        return;
    }
    const size_t full = static_cast<size_t>(ell_) * ell_;
    for (;;) {
        std::map<Point, std::vector<const CycloScalar*>> groups;
        for (const auto& [p, c] : terms_) groups[reduce_point(p, ell_, level_ - 1)].push_back(&c);
        bool ok = true;
        for (const auto& [p, cs] : groups) {
            if (cs.size() != full) { ok = false; break; }
            for (const auto* c : cs)
                if (*c != *cs[0]) { ok = false; break; }
            if (!ok) break;
        }
        if (!ok) return;
        std::map<Point, CycloScalar> coarse;
        for (const auto& [p, cs] : groups) coarse[p] = *cs[0];
        terms_ = std::move(coarse);
        --level_;
    }
}

CycloScalar SchwartzFn::operator()(const Point& v) const {
    auto it = terms_.find(reduce_point(v, ell_, level_));
    return it == terms_.end() ? CycloScalar(0) : it->second;
}

std::map<Point, CycloScalar> SchwartzFn::refined(int level) const {
    if (level <= level_) return terms_;
    long m = ipow(ell_, level - level_);
    Rational step = rpow(Rational(ell_), level_);
    std::map<Point, CycloScalar> out;
    for (const auto& [p, c] : terms_)
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j)
                out[reduce_point({p.first + step * i, p.second + step * j}, ell_, level)] = c;
    return out;
}

SchwartzFn& SchwartzFn::operator+=(const SchwartzFn& o) {
    if (o.ell_ != ell_) throw PrimeMismatch("Schwartz functions for different primes");
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int L = std::max(level_, o.level_);
    auto a = refined(L);
    for (const auto& [p, c] : o.refined(L)) a[p] += c;
    return *this = from_terms(ell_, L, std::move(a));
}

SchwartzFn& SchwartzFn::operator-=(const SchwartzFn& o) { return *this += o * CycloScalar(-1); }

SchwartzFn SchwartzFn::operator*(const CycloScalar& c) const {
    auto t = terms_;
    for (auto& [p, v] : t) v *= c;
    return from_terms(ell_, level_, std::move(t));
}

std::string SchwartzFn::str() const {
    if (is_zero()) return "0";
    std::string s = "level " + std::to_string(level_) + ":";
    for (const auto& [p, c] : terms_)
        s += " [" + c.str() + "]*(" + p.first.get_str() + "," + p.second.get_str() + ")";
    return s;
}

SchwartzFn act(const MatQ& g, const SchwartzFn& phi) {
    if (phi.is_zero()) return phi;
    const int ell = phi.ell(), N = phi.level();
    MatQ gi = g.inverse();
    int M = N - g.min_val(ell);
    int K = std::max(0, M - N - gi.min_val(ell));
    long span = ipow(ell, K);
    Rational s = rpow(Rational(ell), N);
    Point e1{s * gi.a, s * gi.b}, e2{s * gi.c, s * gi.d};
    std::map<Point, CycloScalar> out;
    for (const auto& [p, c] : phi.terms()) {
        Point base{p.first * gi.a + p.second * gi.c, p.first * gi.b + p.second * gi.d};
        std::set<Point> seen;
        for (long i = 0; i < span; ++i)
            for (long j = 0; j < span; ++j)
                seen.insert(reduce_point({base.first + e1.first * i + e2.first * j,
                                          base.second + e1.second * i + e2.second * j},
                                         ell, M));
        for (const auto& q : seen) out[q] += c;
    }
    return SchwartzFn::from_terms(ell, M, std::move(out));
}

SchwartzFn fourier(const SchwartzFn& phi) {
    if (phi.is_zero()) return phi;
    const int ell = phi.ell(), n = phi.level();
    int L = -n;
    for (const auto& [p, c] : phi.terms()) {
        if (p.first != 0) L = std::max(L, -val(p.first, ell));
        if (p.second != 0) L = std::max(L, -val(p.second, ell));
    }
    long span = ipow(ell, L + n);
    Rational step = rpow(Rational(ell), -n);
    SqrtScalar vol(rpow(Rational(ell), -2 * n));
    // (x, y) = ell^{-n}(i, j) and every coordinate has valuation >= -L, so the
    // phase e(xb - ya) is zeta_N^{iB - jA} with N = ell^{n+L}; each output
    // value then costs one reduction instead of a product per term
    const int M = n + L;
    const long N = ipow(ell, M);
    int K = M;
    struct Term {
        long A, B;
        const CycloScalar* c;
    };
    std::vector<Term> terms;
    for (const auto& [p, c] : phi.terms()) {
        Rational sc = rpow(Rational(ell), L);
        if (M == 0) terms.push_back({0, 0, &c});
        else terms.push_back({residue(p.first * sc, ell, M), residue(p.second * sc, ell, M), &c});
        K = std::max(K, c.exponent());
    }
    const long NK = ipow(ell, K), up = ipow(ell, K - M);
    std::map<Point, CycloScalar> out;
    for (long i = 0; i < span; ++i) {
        for (long j = 0; j < span; ++j) {
            std::vector<SqrtScalar> full(NK, SqrtScalar(0));
            for (const auto& t : terms) {
                long e = ((i * t.B - j * t.A) % N + N) % N * up;
                const CycloScalar& c = *t.c;
                long lift = c.exponent() == 0 ? 0 : ipow(ell, K - c.exponent());
                for (size_t b = 0; b < c.coeffs().size(); ++b) full[(e + static_cast<long>(b) * lift) % NK] += c.coeffs()[b];
            }
            CycloScalar acc = CycloScalar::from_powers(ell, K, std::move(full));
            if (!acc.is_zero()) out[reduce_point({step * i, step * j}, ell, L)] = acc * CycloScalar(vol);
        }
    }
    return SchwartzFn::from_terms(ell, L, std::move(out));
}

SchwartzFn standard_phi(StdFamily family, int t, int ell) {
    switch (family) {
    case StdFamily::PhiT:
        if (t < 0) throw std::invalid_argument("phi_t needs t >= 0");
        if (t == 0) return SchwartzFn::lattice(ell, 0);
        {
            std::map<Point, CycloScalar> terms;
            long m = ipow(ell, t);
            for (long d = 1; d < m; ++d)
                if (d % ell != 0) terms[{0, Rational(d)}] = CycloScalar(1);
            return SchwartzFn::from_terms(ell, t, std::move(terms));
        }
    case StdFamily::Phi1T:
        if (t < 1) throw std::invalid_argument("phi_{1,t} needs t >= 1");
        return SchwartzFn::coset(ell, {0, 1}, t);
    case StdFamily::Phi01:
        return standard_phi(StdFamily::PhiT, 1, ell);
    }
    throw std::invalid_argument("unknown Schwartz family");
}

SchwartzFn k_average(const SchwartzFn& phi) {
    if (phi.is_zero()) return phi;
    const int ell = phi.ell(), N = phi.level();
    std::map<int, CycloScalar> sums;
    for (const auto& [p, c] : phi.terms()) {
        int j = point_val(p, ell);
        if (j < N) sums[j] += c;
    }
    SchwartzFn out = SchwartzFn::lattice(ell, N) * phi({0, 0});
    for (const auto& [j, s] : sums) {
        long cnt = ipow(ell, 2 * (N - j)) - ipow(ell, 2 * (N - j - 1));
        CycloScalar avg = s * CycloScalar(SqrtScalar(Rational(1, cnt)));
        out += (SchwartzFn::lattice(ell, j) - SchwartzFn::lattice(ell, j + 1)) * avg;
    }
    return out;
}

}  // namespace asai
