#include "asai/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace asai;

namespace {
long failures(const std::vector<CheckReport>& r) {
    return std::count_if(r.begin(), r.end(), [](const CheckReport& c) { return !c.pass; });
}

SuiteOptions small(std::vector<int> ells = {3}) {
    SuiteOptions o;
    o.ells = std::move(ells);
    o.samples = 1;
    return o;
}
}  // namespace

TEST_SUITE("verify") {
TEST_CASE("check reports round-trip through JSON") {
    CheckReport r{"zeta.U", {{"ell", 3}, {"case", "inert"}}, false, "1 != 2", 77};
    auto j = r.to_json();
    CHECK(j["status"] == "fail");
    CHECK(CheckReport::from_json(j) == r);
    r.pass = true;
    CHECK(CheckReport::from_json(r.to_json()).to_json()["status"] == "pass");
}

TEST_CASE("mutation names") {
    for (auto m : {Mutation::None, Mutation::Coefficient, Mutation::Volume, Mutation::CosetRep})
        CHECK(parse_mutation(mutation_name(m)) == m);
    CHECK_FALSE(parse_mutation("bogus").has_value());
}

TEST_CASE("suites are deterministic in the seed") {
    SuiteOptions o = small();
    auto a = run_suite("whittaker", o), b = run_suite("whittaker", o);
    CHECK(a == b);
    o.seed = 2;
    auto c = run_suite("whittaker", o);
    CHECK(a.size() == c.size());
    CHECK(all_pass(c));
    CHECK(is_suite("corpoli"));
    CHECK_FALSE(is_suite("nope"));
}

TEST_CASE("filters restrict the run") {
    SuiteOptions o = small({2});
    o.kind = GroupKind::Inert;
    for (const auto& r : run_suite("corpoli", o)) {
        CHECK(r.params["ell"] == 2);
        CHECK(r.params["case"] == "inert");
    }
}

TEST_CASE("suites pass on their own") {
    for (const char* s : {"whittaker", "zeta_oracle", "theprop", "corpoli", "vanish", "schwartz"}) {
        auto r = run_suite(s, small({2}));
        CHECK_MESSAGE(all_pass(r), s);
        CHECK(!r.empty());
    }
}

TEST_CASE("mutations are detected") {
    SuiteOptions o = small({3});
    long base_w = failures(run_suite("whittaker", o));
    long base_c = failures(run_suite("thecor", o));
    long base_p = failures(run_suite("theprop", o));
    o.mutation = Mutation::Coefficient;
    CHECK(failures(run_suite("whittaker", o)) > base_w);
    o.mutation = Mutation::Volume;
    CHECK(failures(run_suite("thecor", o)) > base_c);
    o.mutation = Mutation::CosetRep;
    CHECK(failures(run_suite("theprop", o)) > base_p);
}
}
