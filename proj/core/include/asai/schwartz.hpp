#pragma once

#include "asai/local_field.hpp"
#include "asai/scalar.hpp"

#include <map>
#include <string>
#include <utility>

namespace asai {

// 2x2 matrix over Q_ell, acting on row vectors from the right.
struct MatQ {
    Rational a{1}, b{0}, c{0}, d{1};

    Rational det() const { return a * d - b * c; }
    MatQ inverse() const;
    friend MatQ operator*(const MatQ& x, const MatQ& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const MatQ& x, const MatQ& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    static MatQ diag(const Rational& x, const Rational& y) { return {x, 0, 0, y}; }
    // smallest valuation among the entries
    int min_val(int ell) const;
    std::string str() const;
};

using Point = std::pair<Rational, Rational>;

// Finite sum of c * ch(p + ell^level Z_ell^2), stored at the coarsest level
// that represents the function, so that equal functions compare equal.
class SchwartzFn {
public:
    explicit SchwartzFn(int ell = 2) : ell_(ell) {}

    // c * ch(p + ell^n Z^2)
    static SchwartzFn coset(int ell, const Point& p, int n, const CycloScalar& c = CycloScalar(1));
    // ch(ell^n Z^2)
    static SchwartzFn lattice(int ell, int n) { return coset(ell, {0, 0}, n); }

    int ell() const { return ell_; }
    int level() const { return level_; }
    const std::map<Point, CycloScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CycloScalar operator()(const Point& v) const;

    // same function at a finer level (not canonical)
    std::map<Point, CycloScalar> refined(int level) const;

    SchwartzFn& operator+=(const SchwartzFn& o);
    SchwartzFn& operator-=(const SchwartzFn& o);
    SchwartzFn operator*(const CycloScalar& c) const;
    friend SchwartzFn operator+(SchwartzFn x, const SchwartzFn& y) { return x += y; }
    friend SchwartzFn operator-(SchwartzFn x, const SchwartzFn& y) { return x -= y; }
    friend bool operator==(const SchwartzFn& x, const SchwartzFn& y) {
        return x.ell_ == y.ell_ && x.level_ == y.level_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const SchwartzFn& x, const SchwartzFn& y) { return !(x == y); }

    std::string str() const;

    // build from terms at a single level; zero terms dropped, then coarsened
    static SchwartzFn from_terms(int ell, int level, std::map<Point, CycloScalar> terms);

private:
    void canonicalize();
    int ell_;
    int level_ = 0;
    std::map<Point, CycloScalar> terms_;
};

// coordinate representative of r + ell^n Z_ell, canonical
Rational reduce_coord(const Rational& r, int ell, int n);
Point reduce_point(const Point& p, int ell, int n);
int point_val(const Point& p, int ell);

// (g.phi)(v) = phi(v g)
SchwartzFn act(const MatQ& g, const SchwartzFn& phi);

// phi^(x, y) = int int e(x v - y u) phi(u, v) du dv, vol(Z_ell) = 1
SchwartzFn fourier(const SchwartzFn& phi);

enum class StdFamily { PhiT, Phi1T, Phi01 };
SchwartzFn standard_phi(StdFamily family, int t, int ell);

// average of k.phi over k in GL2(Z_ell)
SchwartzFn k_average(const SchwartzFn& phi);

}  // namespace asai
