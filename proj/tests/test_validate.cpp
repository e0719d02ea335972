#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "randsat/validate.hpp"

using namespace randsat;

namespace {

void require_well_formed(const SuiteReport& rep, size_t expected_checks) {
    CHECK(rep.checks.size() == expected_checks);
    CHECK_FALSE(rep.data_csv.empty());
    CHECK_FALSE(rep.meta.empty());
    for (const auto& c : rep.checks) {
        CHECK_FALSE(c.name.empty());
        CHECK(c.tolerance >= 0.0);
    }
}

}  // namespace

TEST_CASE("decomposition suite passes at defaults") {
    SuiteReport rep = run_decomposition_suite();
    require_well_formed(rep, 8);
    CHECK(rep.passed());
}

TEST_CASE("expected count suite passes at defaults") {
    ExpectedCountParams prm;
    prm.workers = 4;
    SuiteReport rep = run_expected_count_suite(prm);
    require_well_formed(rep, 2);
    CHECK(rep.passed());
}

TEST_CASE("histogram suite passes at defaults") {
    HistogramSuiteParams prm;
    prm.workers = 4;
    SuiteReport rep = run_histogram_suite(prm);
    require_well_formed(rep, 3);
    CHECK(rep.passed());
}

TEST_CASE("rates suite passes at defaults") {
    RatesSuiteParams prm;
    prm.workers = 4;
    SuiteReport rep = run_rates_suite(prm);
    require_well_formed(rep, 4);
    CHECK(rep.passed());
}

TEST_CASE("poisson suite passes at defaults") {
    SuiteReport rep = run_poisson_suite();
    require_well_formed(rep, 3);
    CHECK(rep.passed());
}

TEST_CASE("suites are deterministic under a fixed seed") {
    DecompositionParams prm;
    prm.samples = 20000;
    prm.seed = 7;
    SuiteReport a = run_decomposition_suite(prm);
    SuiteReport b = run_decomposition_suite(prm);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].observed == b.checks[i].observed);
        CHECK(a.checks[i].passed == b.checks[i].passed);
    }
    CHECK(a.data_csv == b.data_csv);
}

TEST_CASE("a degenerate radius makes the rates suite fail") {
    // With the radius covering the whole cube every assignment counts as
    // close, so precision can never strictly beat the base rate.
    RatesSuiteParams prm;
    prm.alpha_n = 16;
    prm.workers = 4;
    SuiteReport rep = run_rates_suite(prm);
    CHECK_FALSE(rep.passed());
    bool saw_failed_precision = false;
    for (const auto& c : rep.checks) {
        if (c.name.rfind("precision_beats_base", 0) == 0 && !c.passed)
            saw_failed_precision = true;
    }
    CHECK(saw_failed_precision);
}
