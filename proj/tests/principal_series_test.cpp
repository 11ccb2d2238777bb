#include "asai/hecke.hpp"
#include "asai/principal_series.hpp"

#include "printers.hpp"

#include <doctest.h>

#include <random>

using namespace asai;

namespace {
SqrtScalar q(long a, long b = 1) { return SqrtScalar(frac(a, b)); }

// (a^{m+1} - b^{m+1}) / (a - b)
SqrtScalar geometric(const SqrtScalar& a, const SqrtScalar& b, int m) {
    return (a.pow(m + 1) - b.pow(m + 1)) / (a - b);
}

SqrtScalar random_root(int ell, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5), surd(0, 2);
    int n = num(rng);
    if (n == 0) n = 1;
    SqrtScalar r = q(n, den(rng));
    return surd(rng) == 0 ? r * SqrtScalar::sqrt_prime(ell) : r;
}
}  // namespace

TEST_SUITE("principal_series") {
TEST_CASE("spherical Whittaker values") {
    PSParams h = PSParams::from_roots(GroupKind::H, 5, {q(2), q(3)});
    CHECK(whittaker_value(h, -1) == q(0));
    CHECK(whittaker_value(h, 0) == q(1));
    CHECK(whittaker_value(h, 2) == q(19, 5));
}

TEST_CASE("Whittaker values match the geometric closed form") {
    std::mt19937 rng(3);
    for (int ell : {2, 3, 5})
        for (int trial = 0; trial < 4; ++trial) {
            SqrtScalar a = random_root(ell, rng), b = random_root(ell, rng), c = random_root(ell, rng),
                       d = random_root(ell, rng);
            if (a == b || c == d) continue;
            PSParams h = PSParams::from_roots(GroupKind::H, ell, {a, b});
            PSParams in = PSParams::from_roots(GroupKind::Inert, ell, {a, b});
            PSParams sp = PSParams::from_roots(GroupKind::Split, ell, {a, b, c, d});
            for (int m = 0; m <= 5; ++m) {
                CHECK(whittaker_value(h, m) == SqrtScalar::half_power(ell, -m) * geometric(a, b, m));
                CHECK(whittaker_value(in, m) == q(1) / SqrtScalar(ipow(ell, m)) * geometric(a, b, m));
                CHECK(whittaker_value(sp, m) ==
                      q(1) / SqrtScalar(ipow(ell, m)) * geometric(a, b, m) * geometric(c, d, m));
            }
            // three-term recursion over Q_ell
            for (int m = 0; m <= 4; ++m)
                CHECK(whittaker_value(h, m + 2) == SqrtScalar::half_power(ell, -1) * (a + b) * whittaker_value(h, m + 1) -
                                                       q(1, ell) * a * b * whittaker_value(h, m));
        }
}

TEST_CASE("U(ell) action") {
    PSParams in = PSParams::from_roots(GroupKind::Inert, 3, {q(1), q(2)});
    CHECK(whittaker_U_action(in, 0) == q(9));
    CHECK(whittaker_U_action(in, -1) == q(0));
    CHECK(whittaker_U_action(in, -2) == q(0));
    CHECK(whittaker_U_oracle(in, 0) == CycloScalar(9));
    CHECK(whittaker_U_oracle(in, -1, 2) == CycloScalar(0));
}

TEST_CASE("U(ell) closed form equals the coset sum") {
    std::mt19937 rng(17);
    for (int ell : {2, 3})
        for (GroupKind kind : {GroupKind::H, GroupKind::Split, GroupKind::Inert})
            for (int trial = 0; trial < 2; ++trial) {
                std::vector<SqrtScalar> roots;
                for (int i = 0; i < (kind == GroupKind::Split ? 4 : 2); ++i) roots.push_back(random_root(ell, rng));
                if (roots[0] == roots[1] || (roots.size() == 4 && roots[2] == roots[3])) continue;
                PSParams p = PSParams::from_roots(kind, ell, roots);
                for (int m = -2; m <= 3; ++m)
                    CHECK(CycloScalar(whittaker_U_action(p, m)) == whittaker_U_oracle(p, m, ell == 2 ? 3 : 2));
            }
}

TEST_CASE("central character") {
    PSParams sp = PSParams::from_roots(GroupKind::Split, 3, {q(1), q(2), q(5), q(-1, 2)});
    CHECK(sp.central() == q(-5));
    PSParams in = PSParams::from_roots(GroupKind::Inert, 3, {q(4), q(1, 3)});
    CHECK(in.central() == q(4, 3));
}

TEST_CASE("Siegel section values") {
    UnramChar chi{q(2), 1}, psi{q(1, 3), -1};
    SqrtScalar c = q(6);  // chi psi^{-1}(ell)
    for (int ell : {2, 3}) {
        CHECK(siegel_value(SchwartzFn::lattice(ell, 0), chi, psi) == RatFuncX(1));
        RatFuncX expect = RatFuncX(1) - RatFuncX::monomial(c / SqrtScalar(ell), 2);
        CHECK(siegel_value(standard_phi(StdFamily::PhiT, 2, ell), chi, psi) == expect);
        CHECK(siegel_value(standard_phi(StdFamily::PhiT, 1, ell), chi, psi, MatQ{0, 1, 1, 0}) == RatFuncX());
        CHECK(siegel_value(standard_phi(StdFamily::PhiT, 1, ell), chi, psi, MatQ{1, 0, Rational(ell), 1}) == expect);
    }
}

TEST_CASE("intertwining a Siegel section") {
    for (int ell : {2, 3, 5}) {
        SiegelSection f{SchwartzFn::lattice(ell, 0), UnramChar{q(1), 1}, UnramChar{q(1), -1}};
        SiegelSection m = intertwine_siegel(f);
        CHECK(m.phi == SchwartzFn::lattice(ell, 0));
        CHECK(m.chi.sexp == -1);
        CHECK(m.psi.sexp == 1);
        CHECK(eval_at(m.scalar, q(1)) == CycloScalar(q(1) - q(1, ell)));
    }
    SiegelSection g{standard_phi(StdFamily::PhiT, 1, 3), UnramChar{q(2), 1}, UnramChar{q(5), -1}};
    SiegelSection mg = intertwine_siegel(g);
    CHECK(mg.phi == fourier(g.phi));
    CHECK(mg.scalar == RatFuncX(1) - RatFuncX::monomial(q(2, 15), 2));
}

TEST_CASE("volume of K_0(ell^t) against a count of cosets") {
    CHECK(k0_volume(3, 1) == frac(1, 4));
    CHECK(k0_volume(2, 2) == frac(1, 6));
    CHECK(k0_volume(5, 0) == 1);
    for (int ell : {2, 3})
        for (int t = 1; t <= 2; ++t) {
            long full = subgroup_count_mod(ell, CompactOpen::full(), t);
            long k0 = subgroup_count_mod(ell, CompactOpen::kh0(t), t);
            Rational r(k0, full);
            r.canonicalize();
            CHECK(k0_volume(ell, t) == r);
        }
}

TEST_CASE("pairing reduction") {
    UnramChar chi{q(1), 1}, psi{q(1), -1};
    RatFuncX z1 = RatFuncX::poly({q(1), q(2)});
    SiegelSection f0{SchwartzFn::lattice(3, 0), chi, psi};
    CHECK(pairing_reduced(f0, z1) == siegel_value(f0.phi, chi, psi) * z1);
    SiegelSection f1{standard_phi(StdFamily::PhiT, 1, 3), chi, psi};
    CHECK(pairing_reduced(f1, z1) == siegel_value(f1.phi, chi, psi) * z1 * RatFuncX(q(1, 4)));
    SiegelSection bad{standard_phi(StdFamily::Phi1T, 1, 3), chi, psi};
    CHECK_THROWS_AS(pairing_reduced(bad, z1), UnsupportedSection);
}

TEST_CASE("recognizing standard functions") {
    auto st = as_standard(standard_phi(StdFamily::PhiT, 2, 3) * CycloScalar(q(5)));
    REQUIRE(st.has_value());
    CHECK(st->first == 2);
    CHECK(st->second == q(5));
    CHECK(is_k_invariant(SchwartzFn::lattice(2, 1)));
    CHECK_FALSE(is_k_invariant(standard_phi(StdFamily::Phi1T, 1, 2)));
}
}
