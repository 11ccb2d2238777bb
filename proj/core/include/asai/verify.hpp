#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asai/principal_series.hpp"

namespace asai {

struct CheckReport {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    bool pass = false;
    std::string witness;  // "lhs != rhs" on failure
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
    static CheckReport from_json(const nlohmann::json& j);
    friend bool operator==(const CheckReport& a, const CheckReport& b) {
        return a.id == b.id && a.params == b.params && a.pass == b.pass && a.witness == b.witness &&
               a.seed == b.seed;
    }
};

// Deliberate perturbations used to show the suites can fail.
//   coefficient: closed-form U(ell) Whittaker action uses ell*W instead of ell^2*W
//   volume:      eq1cor uses [H(Z):K_0(ell)] = ell instead of ell+1
//   coset-rep:   one U'(ell) coset representative is replaced by a non-equivalent one
enum class Mutation { None, Coefficient, Volume, CosetRep };
std::optional<Mutation> parse_mutation(const std::string& s);
const char* mutation_name(Mutation m);

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::vector<int> ells;                 // empty: the suite's default primes
    std::optional<GroupKind> kind;         // Split or Inert filter
    Mutation mutation = Mutation::None;
    int samples = 5;                       // Satake samples per parameter tuple
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// reports sorted by (id, params)
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<CheckReport> run_all(const SuiteOptions& opt);

bool all_pass(const std::vector<CheckReport>& r);

}  // namespace asai
