#include "asai/hecke.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace asai {

std::string Mat2::str() const { return "[" + a.str() + "," + b.str() + ";" + c.str() + "," + d.str() + "]"; }

namespace {
Mat2 mmul(const LocalField& F, const Mat2& x, const Mat2& y) {
    return {F.mul(x.a, y.a) + F.mul(x.b, y.c), F.mul(x.a, y.b) + F.mul(x.b, y.d), F.mul(x.c, y.a) + F.mul(x.d, y.c),
            F.mul(x.c, y.b) + F.mul(x.d, y.d)};
}

FieldElt mdet(const LocalField& F, const Mat2& x) { return F.mul(x.a, x.d) - F.mul(x.b, x.c); }

Mat2 minv(const LocalField& F, const Mat2& x) {
    FieldElt D = mdet(F, x);
    if (D.is_zero()) throw std::domain_error("singular matrix");
    FieldElt Di = F.inv(D);
    return {F.mul(x.d, Di), F.mul(-x.b, Di), F.mul(-x.c, Di), F.mul(x.a, Di)};
}

Mat2 from_q(const MatQ& h) { return {h.a, h.b, h.c, h.d}; }

Mat2 unip(const FieldElt& u) { return {1, u, 0, 1}; }
Mat2 diagm(const FieldElt& x, const FieldElt& y) { return {x, 0, 0, y}; }

bool vge(const LocalField& F, const FieldElt& x, int n) { return F.valuation(x) >= n; }

bool member_comp(const LocalField& F, const Mat2& g, const CompactOpen& K) {
    for (const auto* e : {&g.a, &g.b, &g.c, &g.d})
        if (!vge(F, *e, 0)) return false;
    FieldElt D = mdet(F, g);
    if (F.valuation(D) != 0) return false;
    switch (K.family) {
    case KFamily::FullIntegral: return true;
    case KFamily::Kmn:
        return vge(F, g.c, K.n) && vge(F, g.d - FieldElt(1), K.n) && vge(F, D - FieldElt(K.a), K.m);
    case KFamily::KH0: return vge(F, g.c, K.t);
    case KFamily::KH1: return vge(F, g.c, K.t) && vge(F, g.d - FieldElt(1), K.t);
    case KFamily::Kell1: return vge(F, D - FieldElt(1), 1);
    case KFamily::KG0: return vge(F, g.c, 1);
    }
    return false;
}
}  // namespace

GroupElt GroupElt::identity(GroupKind kind, int ell) { return embed(kind, ell, MatQ{}); }

GroupElt GroupElt::embed(GroupKind kind, int ell, const MatQ& h) {
    GroupElt g;
    g.kind = kind;
    g.ell = ell;
    g.comps.assign(kind == GroupKind::Split ? 2 : 1, from_q(h));
    return g;
}

GroupElt GroupElt::make(GroupKind kind, int ell, std::vector<Mat2> comps) {
    GroupElt g;
    g.kind = kind;
    g.ell = ell;
    g.comps = std::move(comps);
    if (g.comps.size() != (kind == GroupKind::Split ? 2u : 1u)) throw std::invalid_argument("wrong component count");
    return g;
}

LocalField GroupElt::field() const {
    return kind == GroupKind::Inert ? LocalField::unramified(ell) : LocalField::rational(ell);
}

GroupElt GroupElt::operator*(const GroupElt& o) const {
    if (o.kind != kind || o.ell != ell) throw std::invalid_argument("group elements of different groups");
    LocalField F = field();
    GroupElt r = *this;
    for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = mmul(F, comps[i], o.comps[i]);
    return r;
}

GroupElt GroupElt::inverse() const {
    LocalField F = field();
    GroupElt r = *this;
    for (auto& c : r.comps) c = minv(F, c);
    return r;
}

std::string GroupElt::str() const {
    std::string s;
    for (size_t i = 0; i < comps.size(); ++i) s += (i ? "x" : "") + comps[i].str();
    return s;
}

std::string CompactOpen::str() const {
    switch (family) {
    case KFamily::FullIntegral: return "GL2(O)";
    case KFamily::Kmn: return "K_{" + std::to_string(m) + "," + std::to_string(n) + "}^(" + a.get_str() + ")";
    case KFamily::KH0: return "K_H0(" + std::to_string(t) + ")";
    case KFamily::KH1: return "K_H1(" + std::to_string(t) + ")";
    case KFamily::Kell1: return "K_ell1";
    case KFamily::KG0: return "K_G0";
    }
    return "?";
}

bool member(const GroupElt& g, const CompactOpen& K) {
    LocalField F = g.field();
    for (const auto& c : g.comps)
        if (!member_comp(F, c, K)) return false;
    return true;
}

bool same_coset(const GroupElt& g1, const GroupElt& g2, const CompactOpen& K) {
    return member(g1.inverse() * g2, K);
}

std::vector<GroupElt> u_ell_decompose(GroupKind kind, int ell, const CompactOpen& K) {
    bool ok = (K.family == KFamily::Kmn && K.n >= 1) || (K.family == KFamily::KH1 && K.t >= 1);
    if (!ok) throw BadSubgroup(K.str() + " is not inside the level-ell unipotent congruence subgroup");
    LocalField F = kind == GroupKind::Inert ? LocalField::unramified(ell) : LocalField::rational(ell);
    auto us = coset_reps(F, 1);
    for (const auto& u : us)
        if (!member(GroupElt::make(kind, ell, std::vector<Mat2>(kind == GroupKind::Split ? 2 : 1, unip(u))), K))
            throw BadSubgroup("unipotent translate " + u.str() + " not in " + K.str());
    std::vector<GroupElt> out;
    if (kind == GroupKind::Split) {
        for (const auto& u : us)
            for (const auto& v : us) out.push_back(GroupElt::make(kind, ell, {Mat2{ell, u, 0, 1}, Mat2{ell, v, 0, 1}}));
    } else {
        for (const auto& u : us) out.push_back(GroupElt::make(kind, ell, {Mat2{ell, u, 0, 1}}));
    }
    return out;
}

GroupElt eta(GroupKind kind, int ell, int m, const Rational& a) {
    Rational x = a / rpow(Rational(ell), m);
    switch (kind) {
    case GroupKind::Split: return GroupElt::make(kind, ell, {Mat2{}, unip(x)});
    case GroupKind::Inert: return GroupElt::make(kind, ell, {unip(FieldElt(0, x))});
    case GroupKind::H: return GroupElt::make(kind, ell, {unip(x)});
    }
    throw std::invalid_argument("unknown group");
}

// ------------------------------------------------------------- HeckeElement

void HeckeElement::add(const SqrtScalar& c, const GroupElt& g, const CompactOpen& K) {
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->K.family == K.family && it->K.m == K.m && it->K.n == K.n && it->K.t == K.t && it->K.a == K.a &&
            same_coset(it->rep, g, K)) {
            it->coeff += c;
            if (it->coeff.is_zero()) terms_.erase(it);
            return;
        }
    }
    if (!c.is_zero()) terms_.push_back({c, g, K});
}

SqrtScalar HeckeElement::operator()(const GroupElt& x) const {
    SqrtScalar s(0);
    for (const auto& t : terms_)
        if (same_coset(t.rep, x, t.K)) s += t.coeff;
    return s;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& t : terms_) {
        HeckeElement probe = o;
        probe.add(-t.coeff, t.rep, t.K);
        if (probe.terms_.size() != o.terms_.size() - 1) return false;
    }
    return true;
}

// ---------------------------------------------------------- enumeration

std::vector<Mat2> enumerate_mod(GroupKind kind, int ell, const CompactOpen& K, int level) {
    LocalField F = kind == GroupKind::Inert ? LocalField::unramified(ell) : LocalField::rational(ell);
    int cmin = 0, dmin = -1;
    switch (K.family) {
    case KFamily::Kmn: cmin = K.n; dmin = K.n; break;
    case KFamily::KH0: cmin = K.t; break;
    case KFamily::KH1: cmin = K.t; dmin = K.t; break;
    case KFamily::KG0: cmin = 1; break;
    default: break;
    }
    auto scaled = [&](int k) {
        std::vector<FieldElt> out;
        if (k >= level) return std::vector<FieldElt>{FieldElt(0)};
        Rational s = rpow(Rational(ell), k);
        for (const auto& x : coset_reps(F, level - k)) out.push_back(F.mul(FieldElt(s), x));
        return out;
    };
    auto free = coset_reps(F, level);
    auto cs = scaled(cmin);
    std::vector<FieldElt> ds;
    if (dmin < 0) {
        ds = free;
    } else {
        for (const auto& x : scaled(dmin)) ds.push_back(FieldElt(1) + x);
    }
    std::vector<Mat2> out;
    for (const auto& a : free)
        for (const auto& b : free)
            for (const auto& c : cs)
                for (const auto& d : ds) {
                    Mat2 g{a, b, c, d};
                    if (member_comp(F, g, K)) out.push_back(g);
                }
    return out;
}

long subgroup_count_mod(int ell, const CompactOpen& K, int level) {
    return static_cast<long>(enumerate_mod(GroupKind::H, ell, K, level).size());
}

// ------------------------------------------------------------ THEprop checks

namespace {
struct Checker {
    CosetReport rep;
    bool check(bool ok, const std::string& id, const std::string& witness = "") {
        ++rep.checks;
        if (!ok && rep.pass) {
            rep.pass = false;
            rep.failed = id;
            rep.witness = witness;
        }
        return ok;
    }
};

GroupElt single(GroupKind kind, int ell, const Mat2& m) {
    return GroupElt::make(kind, ell, std::vector<Mat2>(kind == GroupKind::Split ? 2 : 1, m));
}
}  // namespace

CosetReport check_theprop_cosets(int ell, GroupKind kind, int m, int n, const CosetOptions& opt) {
    Checker ck;
    const CompactOpen K = CompactOpen::kmn(m, n, 1);
    const LocalField F = kind == GroupKind::Inert ? LocalField::unramified(ell) : LocalField::rational(ell);
    const Rational L(ell);
    const Rational lm = rpow(L, m), lmi = rpow(L, -m);
    const GroupElt D = GroupElt::embed(kind, ell, MatQ::diag(ell, 1));

    // (a) decomposition
    auto reps = u_ell_decompose(kind, ell, K);
    if (opt.perturb_rep) reps.back().comps[0].b = reps.back().comps[0].b + FieldElt(1);
    const size_t q2 = static_cast<size_t>(ell) * ell;
    ck.check(reps.size() == q2, "decompose.count", std::to_string(reps.size()) + " vs " + std::to_string(q2));
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            ck.check(!same_coset(reps[i], reps[j], K), "decompose.disjoint", reps[i].str() + " ~ " + reps[j].str());
    for (const auto& r : reps) {
        GroupElt left = r * D.inverse();
        ck.check(member(left, K), "decompose.in_double_coset", r.str());
    }
    {
        // k diag(ell,1) lands in some rep K for generators of K mod ell^{n+1}
        std::vector<GroupElt> ks;
        for (const auto& b : coset_reps(F, std::min(n + 1, 2)))
            ks.push_back(kind == GroupKind::Split ? GroupElt::make(kind, ell, {unip(b), unip(FieldElt(0) - b)})
                                                  : single(kind, ell, unip(b)));
        Rational ln = rpow(L, n);
        ks.push_back(single(kind, ell, Mat2{1, 0, FieldElt(ln), 1}));
        ks.push_back(single(kind, ell, Mat2{FieldElt(1 + rpow(L, std::max(m, 1))), FieldElt(1), FieldElt(ln), 1}));
        for (const auto& k : ks) {
            ck.check(member(k, K), "decompose.generator_in_K", k.str());
            GroupElt x = k * D;
            int hits = 0;
            for (const auto& r : reps) hits += same_coset(r, x, K) ? 1 : 0;
            ck.check(hits == 1, "decompose.cover", k.str() + " hits " + std::to_string(hits));
        }
    }

    // (b) factorization identities
    const SchwartzFn phi1n = standard_phi(StdFamily::Phi1T, n, ell);
    std::map<long, int> wcount;
    auto us = coset_reps(F, 1);
    for (const auto& r : reps) {
        GroupElt lhs = eta(kind, ell, m) * r;
        if (kind == GroupKind::Inert) {
            FieldElt u = r.comps[0].b;
            Rational i = u.x, j = u.y;
            GroupElt exact = GroupElt::make(kind, ell, {mmul(F, unip(i), Mat2{ell, FieldElt(0, j + lmi), 0, 1})});
            ck.check(lhs == exact, "factor.inert_exact", lhs.str() + " vs " + exact.str());
            GroupElt via = single(kind, ell, unip(i)) * D * eta(kind, ell, m + 1, 1 + lm * j);
            ck.check(lhs == via, "factor.inert_eta", lhs.str() + " vs " + via.str());
            GroupElt hu = GroupElt::embed(GroupKind::H, ell, MatQ{1, i, 0, 1});
            ck.check(member(hu, CompactOpen::kh1(n)), "factor.unipotent_in_KH1", hu.str());
            ck.check(act(MatQ{1, i, 0, 1}, phi1n) == phi1n, "factor.unipotent_fixes_phi", i.get_str());
            wcount[residue(j, ell, 1)]++;
        } else {
            Rational u = r.comps[0].b.x, v = r.comps[1].b.x;
            GroupElt literal = GroupElt::make(kind, ell, {unip(u), Mat2{}}) *
                               GroupElt::make(kind, ell, {Mat2{ell, 0, 0, 1}, Mat2{ell, FieldElt(v + lmi), 0, 1}});
            ck.check(lhs == literal, "factor.split_exact", lhs.str() + " vs " + literal.str());
            long w = residue(v - u, ell, 1);
            GroupElt via = GroupElt::embed(kind, ell, MatQ{1, u, 0, 1}) * D * eta(kind, ell, m + 1, 1 + lm * w);
            ck.check(same_coset(lhs, via, K), "factor.split_coset", lhs.str() + " vs " + via.str());
            // dropping the left (1,u) factor only works after H-equivariance
            GroupElt dropped = GroupElt::make(kind, ell, {Mat2{ell, 0, 0, 1}, Mat2{ell, FieldElt(v + lmi), 0, 1}});
            ck.check(same_coset(lhs, dropped, K) == (residue(u, ell, 1) == 0), "factor.split_literal_claim",
                     "u=" + u.get_str());
            GroupElt hu = GroupElt::embed(GroupKind::H, ell, MatQ{1, u, 0, 1});
            ck.check(member(hu, CompactOpen::kh1(n)), "factor.unipotent_in_KH1", hu.str());
            ck.check(act(MatQ{1, u, 0, 1}, phi1n) == phi1n, "factor.unipotent_fixes_phi", u.get_str());
            wcount[w]++;
        }
    }
    ck.check(static_cast<long>(wcount.size()) == ell, "factor.classes", std::to_string(wcount.size()));
    for (const auto& [w, c] : wcount)
        ck.check(c == ell, "factor.multiplicity", "class " + std::to_string(w) + ": " + std::to_string(c));

    // (c) collapse: eta_{m+1}^{(1+ell^m v)} in K
    int collapse = 0;
    for (long v = 0; v < ell; ++v) {
        bool in = member(eta(kind, ell, m + 1, 1 + lm * v), K);
        if (in) {
            ++collapse;
            ck.check(m == 0 && residue(Rational(v + 1), ell, 1) == 0, "collapse.class", "v=" + std::to_string(v));
        }
    }
    ck.rep.collapse_count = collapse;
    ck.check(collapse == (m == 0 ? 1 : 0), "collapse.count", std::to_string(collapse));

    // (d) conjugation and invariance
    for (long r = 0; r < ell; ++r) {
        Rational a = 1 + lm * r;
        if (val(a, ell) != 0) continue;
        GroupElt da = GroupElt::embed(kind, ell, MatQ::diag(a, 1));
        GroupElt conj = da * eta(kind, ell, m + 1) * da.inverse();
        ck.check(conj == eta(kind, ell, m + 1, a), "conj.exact", conj.str());
        ck.check(member(da, K), "conj.diag_in_K", da.str());
        ck.check(same_coset(da * eta(kind, ell, m + 1), eta(kind, ell, m + 1, a), K), "conj.coset", a.get_str());
        ck.check(act(MatQ::diag(a, 1), phi1n) == phi1n, "conj.fixes_phi", a.get_str());
    }
    const Rational ln = rpow(L, n);
    SchwartzFn sum_sigma(ell);
    for (long k = 0; k < ell; ++k) {
        MatQ s = MatQ::diag(1, 1 + ln * k);
        GroupElt sg = GroupElt::embed(kind, ell, s);
        for (long v = 0; v < ell; ++v) {
            GroupElt xi = eta(kind, ell, m + 1, 1 + lm * v);
            ck.check(same_coset(sg * xi, xi, K), "sigma.fixes_xi", "k=" + std::to_string(k) + " v=" + std::to_string(v));
        }
        sum_sigma += act(s, standard_phi(StdFamily::Phi1T, n + 1, ell));
    }
    SchwartzFn chS(ell);
    for (long i = 0; i < ell; ++i) chS += SchwartzFn::coset(ell, {0, 1 + ln * i}, n + 1);
    ck.check(sum_sigma == chS, "sigma.schwartz_sum", sum_sigma.str() + " vs " + chS.str());
    long big = subgroup_count_mod(ell, CompactOpen::kh1(n), n + 1);
    long small = subgroup_count_mod(ell, CompactOpen::kh1(n + 1), n + 1);
    ck.check(big == small * ell * ell, "index.KH1", std::to_string(big) + "/" + std::to_string(small));
    return ck.rep;
}

// ------------------------------------------------------------ U(ell) grid

CosetReport check_u_ell_grid(int ell, GroupKind kind, int m, int n, unsigned seed, int samples) {
    Checker ck;
    // the split group is a product, so one rational component carries the check
    GroupKind comp = kind == GroupKind::Split ? GroupKind::H : kind;
    const CompactOpen K = CompactOpen::kmn(m, n, 1);
    const LocalField F = comp == GroupKind::Inert ? LocalField::unramified(ell) : LocalField::rational(ell);
    std::vector<GroupElt> reps;
    for (const auto& u : coset_reps(F, 1)) reps.push_back(GroupElt::make(comp, ell, {Mat2{ell, u, 0, 1}}));
    const GroupElt D = GroupElt::embed(comp, ell, MatQ::diag(ell, 1));
    const GroupElt Di = D.inverse();

    std::vector<GroupElt> ks;
    std::mt19937 rng(seed);
    if (samples == 0) {
        for (const auto& g : enumerate_mod(comp, ell, K, n + 1)) ks.push_back(GroupElt::make(comp, ell, {g}));
    } else {
        auto all = coset_reps(F, n + 1);
        Rational ln = rpow(Rational(ell), n);
        while (static_cast<int>(ks.size()) < samples) {
            auto pick = [&]() { return all[rng() % all.size()]; };
            Mat2 g{pick(), pick(), F.mul(FieldElt(ln), pick()), FieldElt(1) + F.mul(FieldElt(ln), pick())};
            GroupElt x = GroupElt::make(comp, ell, {g});
            if (member(x, K)) ks.push_back(x);
        }
    }
    // distinct cosets k diag(ell,1) K and k diag(ell,1)^{-1} K by brute force
    auto distinct = [&](const GroupElt& d) {
        std::vector<GroupElt> S;
        for (const auto& k : ks) {
            GroupElt x = k * d;
            bool seen = false;
            for (const auto& s : S)
                if (same_coset(s, x, K)) { seen = true; break; }
            if (!seen) S.push_back(x);
        }
        return S;
    };
    auto S = distinct(D), Sp = distinct(Di);
    ck.check(S.size() == reps.size(), "grid.coset_count", std::to_string(S.size()) + " vs " + std::to_string(reps.size()));
    auto in_union = [&](const std::vector<GroupElt>& cs, const GroupElt& g) {
        for (const auto& c : cs)
            if (same_coset(c, g, K)) return true;
        return false;
    };
    // evaluation points b k with b in a diagonal window
    std::vector<GroupElt> grid;
    for (int i = -(m + 2); i <= m + 2; ++i)
        for (int j = -1; j <= 1; ++j) {
            GroupElt b = GroupElt::embed(comp, ell, MatQ::diag(rpow(Rational(ell), i), rpow(Rational(ell), j)));
            for (size_t s = 0; s < std::min<size_t>(ks.size(), 12); ++s) {
                const auto& k = ks[(s * 7919 + static_cast<size_t>(i + j) * 31) % ks.size()];
                grid.push_back(b * k);
                grid.push_back(k * b);
                grid.push_back(k * D * b);
            }
        }
    for (const auto& x : S) grid.push_back(x);
    for (const auto& x : Sp) grid.push_back(x);
    for (const auto& g : grid) {
        bool lhs = false;
        int hits = 0;
        for (const auto& r : reps) hits += same_coset(r, g, K) ? 1 : 0;
        lhs = hits > 0;
        ck.check(hits <= 1, "grid.disjoint", g.str());
        ck.check(lhs == in_union(S, g), "grid.U", g.str());
        // U'(g) = U(g^{-1})
        GroupElt gi = g.inverse();
        bool u_of_inv = false;
        for (const auto& r : reps) u_of_inv = u_of_inv || same_coset(r, gi, K);
        ck.check(in_union(Sp, g) == u_of_inv, "grid.transpose", g.str());
    }
    return ck.rep;
}

}  // namespace asai
