#include "asai/hecke.hpp"

#include "printers.hpp"

#include <doctest.h>

using namespace asai;

TEST_SUITE("hecke") {
TEST_CASE("membership") {
    for (GroupKind kind : {GroupKind::H, GroupKind::Split, GroupKind::Inert}) {
        CHECK_FALSE(member(GroupElt::embed(kind, 3, MatQ::diag(3, 1)), CompactOpen::full()));
        CHECK(member(eta(kind, 3, 0, 1), CompactOpen::full()));
        CHECK(member(eta(kind, 3, 0, 1), CompactOpen::kmn(0, 2)));
        CHECK_FALSE(member(eta(kind, 3, 1, 1), CompactOpen::full()));
        for (int n = 1; n <= 3; ++n) {
            CHECK(member(eta(kind, 3, 1, 1 + 2), CompactOpen::kmn(0, n)));
            CHECK(member(eta(kind, 3, 1, 1 + 5), CompactOpen::kmn(0, n)));
            CHECK_FALSE(member(eta(kind, 3, 1, 1 + 1), CompactOpen::kmn(0, n)));
        }
    }
    CHECK(member(GroupElt::embed(GroupKind::H, 2, MatQ{1, 0, 4, 1}), CompactOpen::kh1(2)));
    CHECK_FALSE(member(GroupElt::embed(GroupKind::H, 2, MatQ{1, 0, 2, 1}), CompactOpen::kh0(2)));
    CHECK(member(GroupElt::embed(GroupKind::H, 3, MatQ{1, 0, 3, 2}), CompactOpen::kh0(1)));
    CHECK_FALSE(member(GroupElt::embed(GroupKind::H, 3, MatQ{1, 0, 3, 2}), CompactOpen::kh1(1)));
}

TEST_CASE("U(ell) double coset decomposition") {
    auto inert = u_ell_decompose(GroupKind::Inert, 2, CompactOpen::kmn(0, 1));
    CHECK(inert.size() == 4);
    auto split = u_ell_decompose(GroupKind::Split, 3, CompactOpen::kmn(0, 1));
    CHECK(split.size() == 9);
    for (const auto* reps : {&inert, &split}) {
        for (size_t i = 0; i < reps->size(); ++i)
            for (size_t j = i + 1; j < reps->size(); ++j)
                CHECK_FALSE(same_coset((*reps)[i], (*reps)[j], CompactOpen::kmn(0, 1)));
    }
    CHECK_THROWS_AS(u_ell_decompose(GroupKind::H, 3, CompactOpen::full()), BadSubgroup);
    CHECK_THROWS_AS(u_ell_decompose(GroupKind::H, 3, CompactOpen::kh0(1)), BadSubgroup);
}

TEST_CASE("eta elements") {
    GroupElt e = eta(GroupKind::Inert, 3, 0, 1);
    CHECK(member(e, CompactOpen::full()));
    CHECK(e * e.inverse() == GroupElt::identity(GroupKind::Inert, 3));
    GroupElt s = eta(GroupKind::Split, 3, 2, 1);
    CHECK(s.comps[0] == Mat2{});
    CHECK(s.comps[1].b == FieldElt(frac(1, 9)));
}

TEST_CASE("Hecke elements merge equal cosets") {
    HeckeElement a;
    GroupElt g = GroupElt::embed(GroupKind::H, 3, MatQ::diag(3, 1));
    a.add(SqrtScalar(2), g, CompactOpen::full());
    a.add(SqrtScalar(1), g * GroupElt::embed(GroupKind::H, 3, MatQ{1, 1, 0, 1}), CompactOpen::full());
    CHECK(a.terms().size() == 1);
    CHECK(a(g) == SqrtScalar(3));
    CHECK(a(GroupElt::identity(GroupKind::H, 3)) == SqrtScalar(0));
}

TEST_CASE("index of K_0(ell) by counting") {
    for (int ell : {2, 3, 5}) {
        long full = subgroup_count_mod(ell, CompactOpen::full(), 1);
        long k0 = subgroup_count_mod(ell, CompactOpen::kh0(1), 1);
        CHECK(full == (ell * ell - 1) * (ell * ell - ell));
        CHECK(full == (ell + 1) * k0);
    }
}

TEST_CASE("coset identities behind the U'(ell) norm relation") {
    auto a = check_theprop_cosets(2, GroupKind::Inert, 1, 2);
    CHECK_MESSAGE(a.pass, a.failed << ": " << a.witness);
    auto b = check_theprop_cosets(3, GroupKind::Split, 0, 1);
    CHECK_MESSAGE(b.pass, b.failed << ": " << b.witness);
    CHECK(b.collapse_count == 1);
    auto c = check_theprop_cosets(3, GroupKind::Split, 1, 2);
    CHECK(c.pass);
    CHECK(c.collapse_count == 0);
}

TEST_CASE("a perturbed coset representative is caught") {
    CosetOptions opt;
    opt.perturb_rep = true;
    auto r = check_theprop_cosets(3, GroupKind::Split, 0, 1, opt);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.witness.empty());
}

TEST_CASE("decomposition against brute-force cosets") {
    auto r = check_u_ell_grid(2, GroupKind::Inert, 0, 1, 1);
    CHECK_MESSAGE(r.pass, r.failed << ": " << r.witness);
    auto s = check_u_ell_grid(3, GroupKind::Split, 0, 1, 1, 200);
    CHECK_MESSAGE(s.pass, s.failed << ": " << s.witness);
}
}
