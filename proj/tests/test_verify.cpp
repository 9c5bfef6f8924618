#include <catch2/catch_amalgamated.hpp>

#include "ordcalc/verify.hpp"

using namespace ordcalc;

TEST_CASE("every suite passes on a tiny domain") {
    const VerificationReport report = run_verify(VerifyBounds{1, 1, 1});
    REQUIRE(report.suites.size() == verification_suites().size());
    for (const SuiteResult& s : report.suites) {
        INFO(s.name << ": " << s.first_counterexample);
        CHECK(s.failures == 0);
        CHECK(s.checks > 0);
    }
    REQUIRE(report.ok());
}

TEST_CASE("every suite passes on a small domain, sharded") {
    const VerificationReport report = run_verify(VerifyBounds{2, 2, 2}, 4);
    for (const SuiteResult& s : report.suites) {
        INFO(s.name << ": " << s.first_counterexample);
        CHECK(s.failures == 0);
    }
    REQUIRE(report.ok());
}

TEST_CASE("shard count does not change the outcome") {
    const VerificationReport one = run_verify(VerifyBounds{2, 2, 2}, 1);
    const VerificationReport four = run_verify(VerifyBounds{2, 2, 2}, 4);
    REQUIRE(one.suites.size() == four.suites.size());
    for (std::size_t i = 0; i < one.suites.size(); ++i) {
        CHECK(one.suites[i].name == four.suites[i].name);
        CHECK(one.suites[i].checks == four.suites[i].checks);
        CHECK(one.suites[i].failures == four.suites[i].failures);
    }
}

TEST_CASE("the registry names every module family") {
    const auto suites = verification_suites();
    auto has = [&suites](const std::string& name) {
        for (const Suite& s : suites)
            if (s.name == name) return true;
        return false;
    };
    REQUIRE(has("band/laws"));
    REQUIRE(has("oracle/closed-form-agreement"));
    REQUIRE(has("derivative/defect-dichotomy"));
    REQUIRE(has("cli/parser-roundtrip"));
}
