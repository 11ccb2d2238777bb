#include "asai/euler.hpp"
#include "asai/zeta.hpp"

#include "printers.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <random>

using namespace asai;
using nlohmann::json;

namespace {
SqrtScalar q(long a, long b = 1) { return SqrtScalar(frac(a, b)); }

Poly P(std::initializer_list<long> c) {
    Poly p;
    for (long x : c) p.push_back(SqrtScalar(x));
    return p;
}

// a + b r + c s + e r s with r^2 = d1, s^2 = d2
struct Biquad {
    Rational a, b, c, e;
    static inline Rational d1, d2;
    Biquad(Rational a_ = 0, Rational b_ = 0, Rational c_ = 0, Rational e_ = 0) : a(a_), b(b_), c(c_), e(e_) {}
    friend Biquad operator+(const Biquad& x, const Biquad& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.e + y.e}; }
    friend Biquad operator*(const Biquad& x, const Biquad& y) {
        return {x.a * y.a + d1 * x.b * y.b + d2 * x.c * y.c + d1 * d2 * x.e * y.e,
                x.a * y.b + x.b * y.a + d2 * (x.c * y.e + x.e * y.c),
                x.a * y.c + x.c * y.a + d1 * (x.b * y.e + x.e * y.b),
                x.a * y.e + x.e * y.a + x.b * y.c + x.c * y.b};
    }
};

using BPoly = std::vector<Biquad>;
BPoly bmul(const BPoly& x, const BPoly& y) {
    BPoly out(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) out[i + j] = out[i + j] + x[i] * y[j];
    return out;
}

// expand the Asai product over Q(sqrt d1, sqrt d2) from the Hecke polynomials
// X^2 - a X + ell^{w-1} eps (split, one per prime) or X^2 - a X + ell^{2(w-1)} eps (inert)
std::vector<Rational> brute_force_asai(const HilbertFormInput& f, const PrimeRecord& rec) {
    const int w = f.w();
    Rational half(1, 2);
    Rational scale = rpow(Rational(rec.ell), -(f.t + f.tp));
    BPoly prod{Biquad(1)};
    if (rec.splitting == GroupKind::Split) {
        Rational p1 = rpow(Rational(rec.ell), w - 1) * rec.eps[0], p2 = rpow(Rational(rec.ell), w - 1) * rec.eps[1];
        Biquad::d1 = rec.a[0] * rec.a[0] - 4 * p1;
        Biquad::d2 = rec.a[1] * rec.a[1] - 4 * p2;
        Biquad roots1[2] = {Biquad(rec.a[0] * half, half), Biquad(rec.a[0] * half, -half)};
        Biquad roots2[2] = {Biquad(rec.a[1] * half, 0, half), Biquad(rec.a[1] * half, 0, -half)};
        for (const auto& x : roots1)
            for (const auto& y : roots2) {
                Biquad m = x * y * Biquad(-scale);
                prod = bmul(prod, {Biquad(1), m});
            }
    } else {
        Rational p = rpow(Rational(rec.ell), 2 * (w - 1)) * rec.eps[0];
        Biquad::d1 = rec.a[0] * rec.a[0] - 4 * p;
        Biquad::d2 = 1;
        Biquad al(rec.a[0] * half, half), be(rec.a[0] * half, -half);
        prod = bmul(prod, {Biquad(1), al * Biquad(-scale)});
        prod = bmul(prod, {Biquad(1), be * Biquad(-scale)});
        prod = bmul(prod, {Biquad(1), Biquad(0), al * be * Biquad(-scale * scale)});
    }
    std::vector<Rational> out;
    for (const auto& x : prod) {
        REQUIRE(x.b == 0);
        REQUIRE(x.c == 0);
        REQUIRE(x.e == 0);
        out.push_back(x.a);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<Rational> rational_coeffs(const Poly& p) {
    std::vector<Rational> out;
    for (const auto& x : p) {
        REQUIRE(x.is_rational());
        out.push_back(x.rat());
    }
    return out;
}

HilbertFormInput weight_two() {
    HilbertFormInput f;
    f.k = f.kp = 0;
    return f;
}

PrimeRecord split_rec(int ell, long a1, long a2, long e1 = 1, long e2 = 1) {
    return {ell, GroupKind::Split, {Rational(a1), Rational(a2)}, {Rational(e1), Rational(e2)}};
}

json sample_doc() {
    return json::parse(R"({"weight": [2, 2], "t": 0, "tprime": 0, "level_norm": 1,
        "primes": [{"ell": 2, "splitting": "split", "a": ["0", "0"], "eps": ["1", "1"]},
                   {"ell": 3, "splitting": "inert", "a": ["0"], "eps": ["1"]}],
        "j": [0, 1]})");
}

std::string schema_path(const json& doc) {
    try {
        HilbertFormInput::from_json(doc);
    } catch (const SchemaError& e) {
        return e.path;
    }
    return "<accepted>";
}
}  // namespace

TEST_SUITE("euler") {
TEST_CASE("Satake data from Hecke eigenvalues") {
    PSParams s = satake_from_eigenvalues(split_rec(2, 0, 0), 2);
    CHECK(s.sums == std::vector<SqrtScalar>{q(0), q(0)});
    CHECK(s.prods == std::vector<SqrtScalar>{q(1), q(1)});
    PSParams i = satake_from_eigenvalues({3, GroupKind::Inert, {Rational(0)}, {Rational(1)}}, 2);
    CHECK(i.sums == std::vector<SqrtScalar>{q(0)});
    CHECK(i.prods == std::vector<SqrtScalar>{q(1)});
}

TEST_CASE("Asai Euler factors") {
    HilbertFormInput f = weight_two();
    Poly one_minus_4x2 = P({1, 0, -4});
    CHECK(asai_euler_factor(f, split_rec(2, 0, 0)) == poly::mul(one_minus_4x2, one_minus_4x2));
    // the roots are +-3i, so (1 - 3iX)(1 + 3iX)(1 - 9X^2) = (1 + 9X^2)(1 - 9X^2)
    PrimeRecord in{3, GroupKind::Inert, {Rational(0)}, {Rational(1)}};
    CHECK(asai_euler_factor(f, in) == P({1, 0, 0, 0, -81}));
    CHECK(poly::str(asai_euler_factor(f, split_rec(2, 0, 0))) == "1 - 8*X^2 + 16*X^4");
    Poly mixed = asai_euler_factor(f, split_rec(2, 1, 2));
    CHECK(mixed[0] == q(1));
    CHECK(mixed[1] == q(-2));
    CHECK(mixed[4] == q(16));
}

TEST_CASE("Euler factors match the expanded product over the splitting field") {
    HilbertFormInput f = weight_two();
    CHECK(rational_coeffs(asai_euler_factor(f, split_rec(2, 1, 2))) == brute_force_asai(f, split_rec(2, 1, 2)));
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> a(-9, 9), sgn(0, 1);
    for (int ell : {2, 3, 5, 7})
        for (int trial = 0; trial < 6; ++trial) {
            HilbertFormInput g;
            g.t = trial % 2;
            g.k = 2 * (trial % 3);
            g.tp = g.t;
            g.kp = g.k;
            PrimeRecord s = split_rec(ell, a(rng), a(rng), sgn(rng) ? 1 : -1, sgn(rng) ? 1 : -1);
            CHECK(rational_coeffs(asai_euler_factor(g, s)) == brute_force_asai(g, s));
            PrimeRecord in{ell, GroupKind::Inert, {frac(a(rng), 1 + trial)}, {Rational(sgn(rng) ? 1 : -1)}};
            CHECK(rational_coeffs(asai_euler_factor(g, in)) == brute_force_asai(g, in));
        }
}

TEST_CASE("the Euler factor is the reciprocal Asai L-factor") {
    HilbertFormInput f = weight_two();
    CHECK(check_corpoli(f, split_rec(2, 0, 0)).pass);
    CHECK(check_corpoli(f, {3, GroupKind::Inert, {Rational(0)}, {Rational(1)}}).pass);
    CHECK(check_corpoli(f, split_rec(2, 1, 2)).pass);
    HilbertFormInput g;
    g.k = 1;
    g.kp = 3;
    g.t = 1;
    g.tp = 0;
    CHECK(check_corpoli(g, split_rec(5, 3, -4, 1, -1)).pass);
}

TEST_CASE("a corrupted nebentypus value breaks the identity") {
    HilbertFormInput f = weight_two();
    PrimeRecord good = split_rec(3, 1, 2), bad = split_rec(3, 1, 2, 1, -1);
    RatFuncX lhs = RatFuncX::poly(asai_euler_factor(f, bad)).scale_var(q(1, 3));
    RatFuncX rhs = asai_lfactor(satake_from_eigenvalues(good, f.w()), q(1)).inverse();
    CHECK(lhs != rhs);
    RatFuncX lhs_good = RatFuncX::poly(asai_euler_factor(f, good)).scale_var(q(1, 3));
    CHECK(lhs_good == rhs);
}

TEST_CASE("Q polynomials") {
    CHECK(q_polynomial(P({1, 0, -4}), 0, 2) == P({1, 0, -1}));
    CHECK(q_polynomial(P({1}), 3, 5) == P({1}));
    Poly p = P({1, -2, 7, 0, 16});
    for (int ell : {2, 3})
        for (int j1 = 0; j1 < 3; ++j1)
            for (int j2 = 0; j2 < 3; ++j2)
                CHECK(q_polynomial(q_polynomial(p, j1, ell), j2, ell) == q_polynomial(p, j1 + j2 + 1, ell));
}

TEST_CASE("parsing a form") {
    HilbertFormInput f = HilbertFormInput::from_json(sample_doc());
    CHECK(f.w() == 2);
    REQUIRE(f.primes.size() == 2);
    CHECK(f.primes[1].splitting == GroupKind::Inert);
    CHECK(f.j == std::vector<int>{0, 1});
    CHECK(parse_rational("-6/4") == frac(-3, 2));
    CHECK_THROWS(parse_rational("1.5"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("schema errors carry the field path") {
    json d = sample_doc();
    d.erase("t");
    CHECK(schema_path(d) == "/t");
    d = sample_doc();
    d["extra"] = 1;
    CHECK(schema_path(d) == "/extra");
    d = sample_doc();
    d["primes"][0]["a"] = json::array({"0"});
    CHECK(schema_path(d) == "/primes/0/a");
    d = sample_doc();
    d["primes"][1]["eps"] = json::array({"0"});
    CHECK(schema_path(d) == "/primes/1/eps/0");
    d = sample_doc();
    d["primes"][0]["a"][1] = "0.5";
    CHECK(schema_path(d) == "/primes/0/a/1");
    d = sample_doc();
    d["primes"][1]["splitting"] = "ramified";
    CHECK(schema_path(d) == "/primes/1/splitting");
    d = sample_doc();
    d["level_norm"] = 6;
    CHECK(schema_path(d) == "/primes/0/ell");
    d = sample_doc();
    d["weight"] = json::array({2, 3});
    CHECK(schema_path(d) == "/weight");
    d = sample_doc();
    d["j"][1] = -1;
    CHECK(schema_path(d) == "/j/1");
    d = sample_doc();
    d["primes"][0]["ell"] = 4;
    CHECK(schema_path(d) == "/primes/0/ell");
}
}
