#pragma once

#include "asai/local_field.hpp"
#include "asai/principal_series.hpp"
#include "asai/schwartz.hpp"

#include <string>
#include <vector>

namespace asai {

struct BadSubgroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Mat2 {
    FieldElt a{1}, b{0}, c{0}, d{1};
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    std::string str() const;
};

// H = GL2(Q_ell) (one rational component), G split (two rational
// components), G inert (one component over E).
struct GroupElt {
    GroupKind kind = GroupKind::H;
    int ell = 2;
    std::vector<Mat2> comps;

    static GroupElt identity(GroupKind kind, int ell);
    // iota: H -> G, diagonal in the split case
    static GroupElt embed(GroupKind kind, int ell, const MatQ& h);
    static GroupElt make(GroupKind kind, int ell, std::vector<Mat2> comps);

    LocalField field() const;
    GroupElt operator*(const GroupElt& o) const;
    GroupElt inverse() const;
    bool operator==(const GroupElt& o) const { return kind == o.kind && ell == o.ell && comps == o.comps; }
    std::string str() const;
};

enum class KFamily { FullIntegral, Kmn, KH0, KH1, Kell1, KG0 };

struct CompactOpen {
    KFamily family = KFamily::FullIntegral;
    int m = 0, n = 0, t = 0;
    Rational a{1};

    static CompactOpen full() { return {}; }
    static CompactOpen kmn(int m, int n, const Rational& a = 1) { return {KFamily::Kmn, m, n, 0, a}; }
    static CompactOpen kh0(int t) { return {KFamily::KH0, 0, 0, t, 1}; }
    static CompactOpen kh1(int t) { return {KFamily::KH1, 0, 0, t, 1}; }
    static CompactOpen kell1() { return {KFamily::Kell1, 0, 0, 0, 1}; }
    static CompactOpen kg0() { return {KFamily::KG0, 0, 0, 0, 1}; }
    std::string str() const;
};

bool member(const GroupElt& g, const CompactOpen& K);
// g1 K == g2 K
bool same_coset(const GroupElt& g1, const GroupElt& g2, const CompactOpen& K);

// K diag(ell,1) K = disjoint union of rep K
std::vector<GroupElt> u_ell_decompose(GroupKind kind, int ell, const CompactOpen& K);

// eta_m^{(a)}
GroupElt eta(GroupKind kind, int ell, int m, const Rational& a = 1);

struct HeckeTerm {
    SqrtScalar coeff;
    GroupElt rep;
    CompactOpen K;
};

// sum c ch(g K), coset-equal terms merged
class HeckeElement {
public:
    void add(const SqrtScalar& c, const GroupElt& g, const CompactOpen& K);
    SqrtScalar operator()(const GroupElt& x) const;
    const std::vector<HeckeTerm>& terms() const { return terms_; }
    bool operator==(const HeckeElement& o) const;

private:
    std::vector<HeckeTerm> terms_;
};

// K_{m,n} (or any family) elements modulo ell^level with integral lifts,
// componentwise for a single component (H or inert); used by brute-force checks
std::vector<Mat2> enumerate_mod(GroupKind kind, int ell, const CompactOpen& K, int level);

struct CosetReport {
    bool pass = true;
    std::string failed;   // id of the first failing identity
    std::string witness;  // the two unequal values
    int collapse_count = -1;
    int checks = 0;
};

struct CosetOptions {
    bool perturb_rep = false;
};

// every matrix and coset identity used in the U'(ell) norm relation proof
CosetReport check_theprop_cosets(int ell, GroupKind kind, int m, int n, const CosetOptions& opt = {});

// sum over reps of ch(rep K) against ch(K diag(ell,1) K), decided by
// brute-force cosets of k diag(ell,1); exhaustive for a single component
// level, `samples` random points otherwise (0 = exhaustive)
CosetReport check_u_ell_grid(int ell, GroupKind kind, int m, int n, unsigned seed, int samples = 0);

// index of the subgroup at level ell^{level} counted inside the full group
long subgroup_count_mod(int ell, const CompactOpen& K, int level);

}  // namespace asai
