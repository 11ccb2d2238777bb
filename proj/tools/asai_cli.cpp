#include "asai/euler.hpp"
#include "asai/verify.hpp"
#include "asai/zeta.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>

using namespace asai;
using json = nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GroupKind parse_kind(const std::string& s, bool allow_h) {
    if (s == "split") return GroupKind::Split;
    if (s == "inert") return GroupKind::Inert;
    if (allow_h && s == "H") return GroupKind::H;
    throw UsageError("--case must be split or inert" + std::string(allow_h ? " (or H)" : ""));
}

std::vector<SqrtScalar> parse_roots(const std::vector<std::string>& raw, GroupKind kind) {
    size_t need = kind == GroupKind::Split ? 4 : 2;
    if (raw.size() != need)
        throw UsageError("--satake needs " + std::to_string(need) + " roots for the " + kind_name(kind) + " case");
    std::vector<SqrtScalar> out;
    for (const auto& r : raw) {
        try {
            out.push_back(SqrtScalar(parse_rational(r)));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--satake: ") + e.what());
        }
    }
    return out;
}

std::string coeff_list(const Poly& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].str();
    return s + "]";
}

json poly_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(c.str());
    return a;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    bool all = false;
    std::vector<std::string> suites;
    std::vector<int> ells;
    std::string kind;
    std::uint64_t seed = 1;
    int samples = 5;
    std::string format = "human";
    std::string out;
    std::string mutate = "none";
};

int cmd_verify(const VerifyArgs& a) {
    SuiteOptions opt;
    opt.seed = a.seed;
    opt.ells = a.ells;
    opt.samples = a.samples;
    if (!a.kind.empty()) opt.kind = parse_kind(a.kind, false);
    auto mut = parse_mutation(a.mutate);
    if (!mut) throw UsageError("unknown mutation: " + a.mutate);
    opt.mutation = *mut;
    if (a.all == !a.suites.empty()) throw UsageError("give exactly one of --all or --suite");
    for (int ell : a.ells)
        if (ell < 2 || ell > 7 || (ell != 2 && ell % 2 == 0) || ell == 1) throw UsageError("--ell must be one of 2, 3, 5, 7");
    std::vector<std::string> names = a.all ? suite_names() : a.suites;

    std::vector<CheckReport> reports;
    std::map<std::string, std::pair<int, int>> tally;  // suite -> (pass, total)
    for (const auto& name : names) {
        auto r = run_suite(name, opt);
        for (const auto& c : r) {
            tally[name].second++;
            if (c.pass) tally[name].first++;
        }
        reports.insert(reports.end(), r.begin(), r.end());
    }
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) throw UsageError("cannot write " + a.out);
        for (const auto& c : reports) f << c.to_json().dump() << "\n";
    }
    if (a.format == "machine") {
        for (const auto& c : reports) std::cout << c.to_json().dump() << "\n";
    } else {
        int shown = 0;
        for (const auto& c : reports) {
            if (c.pass) continue;
            if (shown++ < 20) std::cout << "FAIL " << c.id << " " << c.params.dump() << "\n     " << c.witness << "\n";
        }
        if (shown > 20) std::cout << "... " << shown - 20 << " more failures\n";
        for (const auto& [name, t] : tally)
            std::cout << std::left << std::setw(12) << name << " " << t.first << "/" << t.second << " pass\n";
        std::cout << "seed " << a.seed << ", mutation " << a.mutate << "\n";
    }
    return all_pass(reports) ? 0 : kExitFail;
}

// ---------------------------------------------------------------- euler-factor

int cmd_euler(const std::string& path, const std::string& format) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    HilbertFormInput form;
    try {
        form = HilbertFormInput::from_json(doc);
    } catch (const SchemaError& e) {
        std::cerr << "schema error at " << (e.path.empty() ? "/" : e.path) << ": " << e.what() << "\n";
        return kExitUsage;
    }
    // output independent of record order
    auto records = form.primes;
    auto key = [](const PrimeRecord& r) {
        std::string k = std::to_string(r.ell) + kind_name(r.splitting);
        for (const auto& x : r.a) k += "|" + to_string(x);
        for (const auto& x : r.eps) k += "|" + to_string(x);
        return k;
    };
    std::stable_sort(records.begin(), records.end(), [&](const PrimeRecord& x, const PrimeRecord& y) {
        return x.ell != y.ell ? x.ell < y.ell : key(x) < key(y);
    });
    for (const auto& r : records) {
        Poly P = asai_euler_factor(form, r);
        if (format == "machine") {
            json row{{"ell", r.ell}, {"splitting", kind_name(r.splitting)}, {"P", poly_json(P)}};
            json a = json::array(), e = json::array();
            for (const auto& x : r.a) a.push_back(to_string(x));
            for (const auto& x : r.eps) e.push_back(to_string(x));
            row["a"] = a;
            row["eps"] = e;
            json q = json::object();
            for (int j : form.j) q[std::to_string(j)] = poly_json(q_polynomial(P, j, r.ell));
            row["Q"] = q;
            std::cout << row.dump() << "\n";
            continue;
        }
        std::cout << "ell=" << r.ell << " " << kind_name(r.splitting) << " a=(";
        for (size_t i = 0; i < r.a.size(); ++i) std::cout << (i ? "," : "") << to_string(r.a[i]);
        std::cout << ") eps=(";
        for (size_t i = 0; i < r.eps.size(); ++i) std::cout << (i ? "," : "") << to_string(r.eps[i]);
        std::cout << ") w=" << form.w() << "\n";
        std::cout << "  P(X)   = " << poly::str(P) << "   " << coeff_list(P) << "\n";
        for (int j : form.j) {
            Poly Q = q_polynomial(P, j, r.ell);
            std::cout << "  Q_" << j << "(X) = " << poly::str(Q) << "   " << coeff_list(Q) << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- zeta, whittaker

struct ZetaArgs {
    int ell = 2;
    std::string kind = "inert";
    std::vector<std::string> satake;
    std::string twist = "1";
    std::string vector = "spherical";
    std::vector<int> borel;  // va, vd
    int order = 10;
};

int cmd_zeta(const ZetaArgs& a) {
    GroupKind kind = parse_kind(a.kind, true);
    PSParams p = PSParams::from_roots(kind, a.ell, parse_roots(a.satake, kind));
    SqrtScalar eta;
    try {
        eta = SqrtScalar(parse_rational(a.twist));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--twist: ") + e.what());
    }
    if (eta.is_zero()) throw UsageError("--twist must be nonzero");
    ZetaVector v;
    if (a.vector == "spherical") v = ZetaVector::spherical();
    else if (a.vector == "U") v = ZetaVector::u_ell();
    else if (a.vector == "borel") {
        if (a.borel.size() != 2) throw UsageError("--borel needs v(a) v(d)");
        v = ZetaVector::borel(a.borel[0], a.borel[1]);
    } else throw UsageError("--vector must be spherical, U or borel");
    if (a.order < 0) throw UsageError("--order must be non-negative");

    RatFuncX closed = zeta_closed(p, eta, v);
    std::cout << p.str() << ", eta(ell) = " << eta.str() << ", vector " << tag_name(v.tag) << "\n";
    std::cout << "Z / L(as) = " << closed.str() << "\n";
    std::cout << "L(as)     = " << asai_lfactor(p, eta).str() << "\n";
    LaurentSeries cs = zeta_closed_series(p, eta, v, a.order), os = zeta_oracle(p, eta, v, a.order);
    std::cout << std::left << std::setw(8) << "power" << std::setw(28) << "closed" << std::setw(28) << "oracle" << "\n";
    bool ok = true;
    for (size_t i = 0; i < cs.c.size(); ++i) {
        bool same = cs.c[i] == os.c[i];
        ok = ok && same;
        std::cout << std::setw(8) << ("X^" + std::to_string(cs.lo + static_cast<int>(i))) << std::setw(28) << cs.c[i].str()
                  << std::setw(28) << os.c[i].str() << (same ? "" : "  MISMATCH") << "\n";
    }
    return ok ? 0 : kExitFail;
}

int cmd_whittaker(int ell, const std::string& kind_s, const std::vector<std::string>& satake, int mmax) {
    GroupKind kind = parse_kind(kind_s, true);
    PSParams p = PSParams::from_roots(kind, ell, parse_roots(satake, kind));
    std::cout << p.str() << "\n";
    std::cout << std::left << std::setw(6) << "m" << std::setw(24) << "W" << std::setw(24) << "U W closed"
              << std::setw(24) << "U W coset sum" << "\n";
    bool ok = true;
    for (int m = -2; m <= mmax; ++m) {
        SqrtScalar u = whittaker_U_action(p, m);
        CycloScalar o = whittaker_U_oracle(p, m);
        ok = ok && CycloScalar(u) == o;
        std::cout << std::setw(6) << m << std::setw(24) << whittaker_value(p, m).str() << std::setw(24) << u.str()
                  << std::setw(24) << o.str() << "\n";
    }
    return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact local computations for Asai-Flach norm relations"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_flag("--all", va.all, "run every suite");
    verify->add_option("--suite", va.suites, "suite id")->check(CLI::IsMember(suite_names()));
    verify->add_option("--ell", va.ells, "restrict to these primes");
    verify->add_option("--case", va.kind, "split or inert")->check(CLI::IsMember({"split", "inert"}));
    verify->add_option("--seed", va.seed, "sampling seed");
    verify->add_option("--samples", va.samples, "Satake samples per tuple")->check(CLI::Range(1, 50));
    verify->add_option("--format", va.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    verify->add_option("--out", va.out, "JSON-lines report path");
    verify->add_option("--mutate", va.mutate, "inject a perturbation")
        ->check(CLI::IsMember({"none", "coefficient", "volume", "coset-rep"}));

    std::string euler_path, euler_format = "human";
    auto* euler = app.add_subcommand("euler-factor", "Asai Euler factors and Q(X) from an eigenvalue file");
    euler->add_option("file", euler_path, "input JSON")->required();
    euler->add_option("--format", euler_format, "human or machine")->check(CLI::IsMember({"human", "machine"}));

    ZetaArgs za;
    auto* zeta = app.add_subcommand("zeta", "closed form and series of a local zeta integral");
    zeta->add_option("--ell", za.ell, "prime")->check(CLI::IsMember({2, 3, 5, 7}));
    zeta->add_option("--case", za.kind, "split, inert or H");
    zeta->add_option("--satake", za.satake, "Satake roots as exact rationals")->required();
    zeta->add_option("--twist", za.twist, "eta(ell), exact rational");
    zeta->add_option("--vector", za.vector, "spherical, U or borel");
    zeta->add_option("--borel", za.borel, "valuations v(a) v(d) of the Borel translate")->expected(2);
    zeta->add_option("--order", za.order, "number of series terms after the first");

    int w_ell = 2, w_mmax = 4;
    std::string w_kind = "inert";
    std::vector<std::string> w_satake;
    auto* whit = app.add_subcommand("whittaker", "spherical Whittaker values and the U(ell) action");
    whit->add_option("--ell", w_ell, "prime")->check(CLI::IsMember({2, 3, 5, 7}));
    whit->add_option("--case", w_kind, "split, inert or H");
    whit->add_option("--satake", w_satake, "Satake roots as exact rationals")->required();
    whit->add_option("--mmax", w_mmax, "largest valuation shown")->check(CLI::Range(-2, 40));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(va);
        if (*euler) return cmd_euler(euler_path, euler_format);
        if (*zeta) return cmd_zeta(za);
        if (*whit) return cmd_whittaker(w_ell, w_kind, w_satake, w_mmax);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
