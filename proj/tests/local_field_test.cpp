#include "asai/local_field.hpp"

#include "printers.hpp"

#include <doctest.h>

#include <set>

using namespace asai;

TEST_SUITE("local_field") {
TEST_CASE("additive character values") {
    for (int ell : {2, 3, 5}) CHECK(additive_char(LocalField::rational(ell), FieldElt(1)) == CycloScalar(1));
    CHECK(additive_char(LocalField::rational(3), FieldElt(frac(1, 3))) == CycloScalar::root_of_unity(3, 1, 1));
    CHECK(additive_char(LocalField::rational(2), FieldElt(frac(3, 4))) == CycloScalar::root_of_unity(2, 2, 3));
    CHECK(e_ell(frac(7, 9), 3) == CycloScalar::root_of_unity(3, 2, 7));
    // 1/2 is a unit at 3, so trivial
    CHECK(e_ell(frac(1, 2), 3) == CycloScalar(1));
}

TEST_CASE("the character is trivial on O but not on ell^-1 O") {
    for (int ell : {2, 3, 5}) {
        LocalField E = LocalField::unramified(ell);
        for (const auto& u : coset_reps(E, 1)) CHECK(additive_char(E, u) == CycloScalar(1));
        bool nontrivial = false;
        for (const auto& u : coset_reps(E, 1))
            nontrivial |= additive_char(E, FieldElt(u.x / ell, u.y / ell)) != CycloScalar(1);
        CHECK(nontrivial);
    }
}

TEST_CASE("sum over O/ell of Psi(y u) vanishes for v(y) = -1") {
    for (int ell : {2, 3, 5})
        for (int deg : {1, 2}) {
            LocalField F = deg == 1 ? LocalField::rational(ell) : LocalField::unramified(ell);
            for (const FieldElt& y : {FieldElt(frac(1, ell)), FieldElt(frac(2, ell), frac(1, ell))}) {
                if (deg == 1 && !y.is_rational()) continue;
                CycloScalar s;
                for (const auto& u : coset_reps(F, 1)) s += additive_char(F, F.mul(y, u));
                CHECK(s == CycloScalar(0));
            }
        }
}

TEST_CASE("additive character is a homomorphism") {
    for (int ell : {2, 3}) {
        LocalField E = LocalField::unramified(ell);
        std::vector<FieldElt> pts;
        for (const auto& u : coset_reps(E, 2)) pts.push_back(FieldElt(u.x / (ell * ell), u.y / ell));
        for (size_t i = 0; i < pts.size(); i += 3)
            for (size_t j = 0; j < pts.size(); j += 5)
                CHECK(additive_char(E, pts[i] + pts[j]) == additive_char(E, pts[i]) * additive_char(E, pts[j]));
    }
}

TEST_CASE("unit shell integral against brute-force averages") {
    CHECK(unit_shell_integral(LocalField::rational(5), 0) == SqrtScalar(1));
    CHECK(unit_shell_integral(LocalField::rational(5), 1) == SqrtScalar(frac(-1, 4)));
    CHECK(unit_shell_integral(LocalField::rational(3), 2) == SqrtScalar(0));
    for (int ell : {2, 3, 5})
        for (int deg : {1, 2})
            for (int k = 0; k <= 2; ++k) {
                LocalField F = deg == 1 ? LocalField::rational(ell) : LocalField::unramified(ell);
                int n = std::max(k, 1);
                CycloScalar sum;
                long units = 0;
                Rational scale = rpow(Rational(ell), -k);
                for (const auto& u : coset_reps(F, n)) {
                    if (!F.unit(u)) continue;
                    ++units;
                    sum += additive_char(F, FieldElt(u.x * scale, u.y * scale));
                }
                CHECK(sum.is_base());
                CHECK(unit_shell_integral(F, k) == sum.base() / SqrtScalar(units));
            }
}

TEST_CASE("coset representatives") {
    CHECK(coset_reps(LocalField::rational(2), 1) == std::vector<FieldElt>{FieldElt(0), FieldElt(1)});
    std::set<FieldElt> got;
    for (const auto& u : coset_reps(LocalField::unramified(2), 1)) got.insert(u);
    CHECK(got == std::set<FieldElt>{FieldElt(0), FieldElt(1), FieldElt(0, 1), FieldElt(1, 1)});
    auto r = coset_reps(LocalField::rational(3), 2);
    CHECK(r.size() == 9);
    for (long i = 0; i < 9; ++i) CHECK(std::count(r.begin(), r.end(), FieldElt(i)) == 1);
}

TEST_CASE("quadratic extension arithmetic") {
    for (int ell : {2, 3, 5, 7}) {
        LocalField E = LocalField::unramified(ell);
        FieldElt d = E.delta();
        CHECK(E.unit(d));
        // delta is not congruent to a rational mod ell: x^2 - trace x + norm is irreducible mod ell
        long tr = residue(E.trace(d), ell, 1), nm = residue(E.norm(d), ell, 1);
        for (long x = 0; x < ell; ++x) CHECK((x * x - tr * x + nm) % ell != 0);
        FieldElt z(frac(3, 2), frac(-5, 7));
        CHECK(E.mul(z, E.inv(z)) == FieldElt(1));
        CHECK(E.norm(E.mul(z, d)) == E.norm(z) * E.norm(d));
        CHECK(E.valuation(FieldElt(Rational(ell), Rational(ell * ell))) == 1);
        CHECK(E.abs_exponent(FieldElt(frac(1, ell))) == 2);
    }
    CHECK(LocalField::unramified(2).dp == -1);
    CHECK(LocalField::unramified(2).dq == -1);
}
}
