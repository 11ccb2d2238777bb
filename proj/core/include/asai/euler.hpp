#pragma once

#include "asai/principal_series.hpp"
#include "asai/scalar.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace asai {

struct SchemaError : std::invalid_argument {
    std::string path;
    SchemaError(std::string p, const std::string& msg) : std::invalid_argument(p + ": " + msg), path(std::move(p)) {}
};

struct PrimeRecord {
    int ell = 2;
    GroupKind splitting = GroupKind::Split;  // Split or Inert
    std::vector<Rational> a;                 // one eigenvalue per prime above ell
    std::vector<Rational> eps;               // nebentypus values
};

struct HilbertFormInput {
    int k = 0, kp = 0;  // weights are k+2, k'+2
    int t = 0, tp = 0;
    long level_norm = 1;
    std::vector<PrimeRecord> primes;
    std::vector<int> j;

    int w() const { return k + 2 + 2 * t; }
    static HilbertFormInput from_json(const nlohmann::json& doc);
};

Rational parse_rational(const std::string& s);

// symmetric Satake data of the local component at ell
PSParams satake_from_eigenvalues(const PrimeRecord& rec, int w);

// P_ell^as(X), coefficients from (a, eps, w) only
Poly asai_euler_factor(const HilbertFormInput& form, const PrimeRecord& rec);

// P(ell^{-1-j} X)
Poly q_polynomial(const Poly& P, int j, int ell);

struct CorpoliReport {
    bool pass = false;
    std::string lhs, rhs;
};

// P(ell^{-1+t+t'} X) == 1 / L(as(sigma), s)
CorpoliReport check_corpoli(const HilbertFormInput& form, const PrimeRecord& rec);

}  // namespace asai
