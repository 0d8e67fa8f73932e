#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "toepblock/theory.hpp"

using namespace toepblock;

namespace {

const double kCatalan[] = {1.0, 2.0, 5.0, 14.0, 42.0};

}  // namespace

TEST_CASE("regime name round-trips") {
    for (Regime r : {Regime::FixedK, Regime::FixedN, Regime::BothLarge}) {
        CHECK(parse_regime(regime_name(r)) == r);
    }
    CHECK_THROWS_AS(parse_regime("fixed"), std::invalid_argument);
}

TEST_CASE("block-iid joint limit is the semicircle") {
    TheoreticalMoments m = theoretical_moments(Model::TBI, Regime::BothLarge, 5);
    REQUIRE(m.t_max() == 5);
    for (int t = 1; t <= 5; ++t) CHECK(m.beta2t[t - 1] == kCatalan[t - 1]);
    CHECK(m.size == 0);
}

TEST_CASE("block-iid fixed-k moments are semicircle at every k") {
    // The opposite-sign Toeplitz class of a Catalan word has exactly k^(t+1)
    // members, so each normalized summand is 1 and the sum is a Catalan
    // number regardless of k.
    for (int k : {1, 2, 3, 4, 8}) {
        TheoreticalMoments m = theoretical_moments(Model::TBI, Regime::FixedK, 4, k);
        CHECK(m.size == k);
        for (int t = 1; t <= 4; ++t)
            CHECK(m.beta2t[t - 1] == doctest::Approx(kCatalan[t - 1]).epsilon(1e-12));
    }
}

TEST_CASE("block-iid fixed-n moments shrink toward the semicircle") {
    double prev_gap = -1.0;
    for (int n : {10, 20, 40}) {
        TheoreticalMoments m = theoretical_moments(Model::TBI, Regime::FixedN, 2, n);
        CHECK(m.beta2t[0] == doctest::Approx(1.0).epsilon(1e-12));
        double gap = m.beta2t[1] - 2.0;
        CHECK(gap > 0.0);
        CHECK(gap < 0.1);
        if (prev_gap >= 0.0) CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("block-toeplitz with one block is the toeplitz limit") {
    // k = 1 leaves a single symmetric Toeplitz matrix, whose limit fourth
    // moment is 8/3.
    TheoreticalMoments m = theoretical_moments(Model::TBT, Regime::FixedK, 2, 1);
    CHECK(m.beta2t[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.beta2t[1] == doctest::Approx(8.0 / 3.0).epsilon(0.005));
}

TEST_CASE("block-toeplitz fixed-k fourth moments") {
    // beta_4(k) = 22/9 + 2/(9 k^2); the p factors are fitted, so allow the
    // extrapolation error observed on the default grid.
    for (int k : {2, 4, 8}) {
        TheoreticalMoments m = theoretical_moments(Model::TBT, Regime::FixedK, 2, k);
        double expect = 22.0 / 9.0 + 2.0 / (9.0 * k * k);
        CHECK(m.beta2t[1] == doctest::Approx(expect).epsilon(0.005));
    }
}

TEST_CASE("block-toeplitz joint limit fourth moment") {
    TheoreticalMoments m = theoretical_moments(Model::TBT, Regime::BothLarge, 2);
    CHECK(m.beta2t[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.beta2t[1] == doctest::Approx(22.0 / 9.0).epsilon(0.005));
}

TEST_CASE("block-toeplitz fixed regimes share one formula") {
    TheoreticalMoments a = theoretical_moments(Model::TBT, Regime::FixedK, 2, 3);
    TheoreticalMoments b = theoretical_moments(Model::TBT, Regime::FixedN, 2, 3);
    REQUIRE(a.t_max() == b.t_max());
    for (int t = 1; t <= a.t_max(); ++t) CHECK(a.beta2t[t - 1] == b.beta2t[t - 1]);
}

TEST_CASE("moment accessor handles parity and range") {
    TheoreticalMoments m = theoretical_moments(Model::TBI, Regime::BothLarge, 3);
    CHECK(m.moment(0) == 1.0);
    CHECK(m.moment(1) == 0.0);
    CHECK(m.moment(2) == 1.0);
    CHECK(m.moment(3) == 0.0);
    CHECK(m.moment(4) == 2.0);
    CHECK(m.moment(5) == 0.0);
    CHECK(m.moment(6) == 5.0);
    CHECK_THROWS_AS(m.moment(7), std::out_of_range);
    CHECK_THROWS_AS(m.moment(-1), std::out_of_range);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(theoretical_moments(Model::TBI, Regime::BothLarge, 0), std::invalid_argument);
    CHECK_THROWS_AS(theoretical_moments(Model::TBI, Regime::BothLarge, 6), std::invalid_argument);
    CHECK_THROWS_AS(theoretical_moments(Model::TBI, Regime::FixedK, 2), std::invalid_argument);
    CHECK_THROWS_AS(theoretical_moments(Model::TBT, Regime::FixedN, 2, 0), std::invalid_argument);
}

TEST_CASE("tight budgets surface as budget errors") {
    CountBudget tight;
    tight.max_nodes = 10;
    CHECK_THROWS_AS(
        theoretical_moments(Model::TBT, Regime::FixedK, 2, 2, default_p_grid(), tight),
        BudgetExceeded);
}
