#include "asai/euler.hpp"

#include "asai/zeta.hpp"

#include <nlohmann/json.hpp>

#include <set>

namespace asai {

using nlohmann::json;

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("not an exact rational: " + s);
    Rational r;
    if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw std::invalid_argument("not an exact rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

namespace {
bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) throw SchemaError(path + "/" + it.key(), "unknown field");
    for (const char* k : keys)
        if (!obj.contains(k)) throw SchemaError(path + "/" + k, "missing field");
}

long get_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
    return v.get<long>();
}

std::vector<Rational> get_rationals(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array of rational strings");
    std::vector<Rational> out;
    for (size_t i = 0; i < v.size(); ++i) {
        std::string p = path + "/" + std::to_string(i);
        if (!v[i].is_string()) throw SchemaError(p, "rationals are given as strings");
        try {
            out.push_back(parse_rational(v[i].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(p, e.what());
        }
    }
    return out;
}
}  // namespace

HilbertFormInput HilbertFormInput::from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("", "expected an object");
    only_keys(doc, "", {"weight", "t", "tprime", "level_norm", "primes", "j"});
    HilbertFormInput f;
    const json& w = doc["weight"];
    if (!w.is_array() || w.size() != 2) throw SchemaError("/weight", "expected [k+2, k'+2]");
    long w0 = get_int(w[0], "/weight/0"), w1 = get_int(w[1], "/weight/1");
    if (w0 < 2 || w1 < 2) throw SchemaError("/weight", "weights must be at least 2");
    f.k = static_cast<int>(w0 - 2);
    f.kp = static_cast<int>(w1 - 2);
    if ((f.k - f.kp) % 2 != 0) throw SchemaError("/weight", "k and k' must have the same parity");
    f.t = static_cast<int>(get_int(doc["t"], "/t"));
    f.tp = static_cast<int>(get_int(doc["tprime"], "/tprime"));
    if (f.k + 2 * f.t != f.kp + 2 * f.tp) throw SchemaError("/tprime", "need k + 2t = k' + 2t'");
    f.level_norm = get_int(doc["level_norm"], "/level_norm");
    if (f.level_norm < 1) throw SchemaError("/level_norm", "must be positive");
    const json& ps = doc["primes"];
    if (!ps.is_array()) throw SchemaError("/primes", "expected an array");
    for (size_t i = 0; i < ps.size(); ++i) {
        std::string p = "/primes/" + std::to_string(i);
        if (!ps[i].is_object()) throw SchemaError(p, "expected an object");
        only_keys(ps[i], p, {"ell", "splitting", "a", "eps"});
        PrimeRecord r;
        long ell = get_int(ps[i]["ell"], p + "/ell");
        if (!is_prime(ell) || ell > 97) throw SchemaError(p + "/ell", "expected a small prime");
        if (f.level_norm % ell == 0) throw SchemaError(p + "/ell", "prime divides the level");
        r.ell = static_cast<int>(ell);
        const json& sp = ps[i]["splitting"];
        if (sp == "split") r.splitting = GroupKind::Split;
        else if (sp == "inert") r.splitting = GroupKind::Inert;
        else throw SchemaError(p + "/splitting", "expected \"split\" or \"inert\"");
        size_t need = r.splitting == GroupKind::Split ? 2 : 1;
        r.a = get_rationals(ps[i]["a"], p + "/a");
        r.eps = get_rationals(ps[i]["eps"], p + "/eps");
        if (r.a.size() != need) throw SchemaError(p + "/a", "expected " + std::to_string(need) + " eigenvalues");
        if (r.eps.size() != need) throw SchemaError(p + "/eps", "expected " + std::to_string(need) + " values");
        for (size_t e = 0; e < need; ++e)
            if (r.eps[e] == 0) throw SchemaError(p + "/eps/" + std::to_string(e), "nebentypus value must be nonzero");
        f.primes.push_back(r);
    }
    const json& js = doc["j"];
    if (!js.is_array()) throw SchemaError("/j", "expected an array");
    for (size_t i = 0; i < js.size(); ++i) {
        long j = get_int(js[i], "/j/" + std::to_string(i));
        if (j < 0) throw SchemaError("/j/" + std::to_string(i), "must be non-negative");
        f.j.push_back(static_cast<int>(j));
    }
    return f;
}

PSParams satake_from_eigenvalues(const PrimeRecord& rec, int w) {
    const int ell = rec.ell;
    if (rec.splitting == GroupKind::Split) {
        std::vector<SqrtScalar> sums, prods;
        for (int i = 0; i < 2; ++i) {
            sums.push_back(SqrtScalar(rec.a[i]) * SqrtScalar::half_power(ell, -1));
            prods.push_back(SqrtScalar(rpow(Rational(ell), w - 2) * rec.eps[i]));
        }
        return PSParams::symmetric(GroupKind::Split, ell, sums, prods);
    }
    return PSParams::symmetric(GroupKind::Inert, ell, {SqrtScalar(rec.a[0] / ell)},
                               {SqrtScalar(rpow(Rational(ell), 2 * (w - 2)) * rec.eps[0])});
}

Poly asai_euler_factor(const HilbertFormInput& form, const PrimeRecord& rec) {
    const int ell = rec.ell, w = form.w();
    Poly P;
    if (rec.splitting == GroupKind::Split) {
        Rational s1 = rec.a[0], s2 = rec.a[1];
        Rational p1 = rpow(Rational(ell), w - 1) * rec.eps[0], p2 = rpow(Rational(ell), w - 1) * rec.eps[1];
        P = {SqrtScalar(1), SqrtScalar(-s1 * s2), SqrtScalar(p1 * s2 * s2 + p2 * s1 * s1 - 2 * p1 * p2),
             SqrtScalar(-p1 * p2 * s1 * s2), SqrtScalar(p1 * p1 * p2 * p2)};
    } else {
        Rational s = rec.a[0], p = rpow(Rational(ell), 2 * (w - 1)) * rec.eps[0];
        P = poly::mul({SqrtScalar(1), SqrtScalar(-s), SqrtScalar(p)}, {SqrtScalar(1), SqrtScalar(0), SqrtScalar(-p)});
    }
    Rational c = rpow(Rational(ell), -(form.t + form.tp));
    Rational ci = 1;
    for (auto& x : P) {
        x *= SqrtScalar(ci);
        ci *= c;
    }
    poly::trim(P);
    return P;
}

Poly q_polynomial(const Poly& P, int j, int ell) {
    Poly out = P;
    Rational c = rpow(Rational(ell), -1 - j), ci = 1;
    for (auto& x : out) {
        x *= SqrtScalar(ci);
        ci *= c;
    }
    poly::trim(out);
    return out;
}

CorpoliReport check_corpoli(const HilbertFormInput& form, const PrimeRecord& rec) {
    RatFuncX lhs = RatFuncX::poly(asai_euler_factor(form, rec))
                       .scale_var(SqrtScalar(rpow(Rational(rec.ell), -1 + form.t + form.tp)));
    RatFuncX rhs = asai_lfactor(satake_from_eigenvalues(rec, form.w()), SqrtScalar(1)).inverse();
    return {lhs == rhs, lhs.str(), rhs.str()};
}

}  // namespace asai
