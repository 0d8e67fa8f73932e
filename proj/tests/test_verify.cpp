#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "toepblock/verify.hpp"

using namespace toepblock;

TEST_CASE("counting oracle suite passes") {
    VerifyReport r = run_verification("counting-oracle");
    CHECK(r.suite == "counting-oracle");
    CHECK(r.pass);
    CHECK_FALSE(r.checks.empty());
    CHECK(r.first_failure().empty());
    for (const auto& check : r.checks) CHECK(check.pass);
}

TEST_CASE("decomposition suite passes and carries certificates") {
    VerifyReport r = run_verification("decomposition");
    CHECK(r.pass);
    CHECK_FALSE(r.decompositions.empty());
    for (const auto& d : r.decompositions) {
        CHECK(d.pass);
        CHECK(d.composite_count == d.fiber_sum);
        CHECK(d.composite_count == d.entry_sum);
    }
}

TEST_CASE("lemma suite passes") {
    VerifyReport r = run_verification("lemmas");
    CHECK(r.pass);
    CHECK(r.first_failure().empty());
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_verification("everything"), std::invalid_argument);
    CHECK_THROWS_AS(run_verification(""), std::invalid_argument);
}
