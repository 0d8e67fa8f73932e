#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "toepblock/spectral.hpp"

using namespace toepblock;

namespace {

constexpr double kPi = 3.14159265358979323846;

SymmetricMatrix tridiagonal(int n, double diag, double off) {
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = diag;
        if (i + 1 < n) {
            m(i, i + 1) = off;
            m(i + 1, i) = off;
        }
    }
    return m;
}

}  // namespace

TEST_CASE("small spectra in closed form") {
    SymmetricMatrix swap(2);
    swap(0, 1) = 1.0;
    swap(1, 0) = 1.0;
    Spectrum s = eigenvalues_symmetric(swap);
    REQUIRE(s.eigenvalues.size() == 2);
    CHECK(s.dim == 2);
    CHECK(s.scale == 1.0);
    CHECK(s.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));

    SymmetricMatrix eye(3);
    for (int i = 0; i < 3; ++i) eye(i, i) = 1.0;
    Spectrum se = eigenvalues_symmetric(eye);
    for (double ev : se.eigenvalues) CHECK(ev == doctest::Approx(1.0).epsilon(1e-13));

    Spectrum st = eigenvalues_symmetric(tridiagonal(3, 0.0, 1.0));
    CHECK(st.eigenvalues[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-13));
    CHECK(st.eigenvalues[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    CHECK(st.eigenvalues[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("free tridiagonal spectrum matches the cosine formula") {
    const int n = 8;
    Spectrum s = eigenvalues_symmetric(tridiagonal(n, 0.0, 1.0));
    REQUIRE(s.eigenvalues.size() == static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        double expect = 2.0 * std::cos(kPi * (n + 1 - j) / (n + 1));
        CHECK(s.eigenvalues[j - 1] == doctest::Approx(expect).scale(1.0).epsilon(1e-12));
    }
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
        CHECK(s.eigenvalues[i - 1] <= s.eigenvalues[i]);
}

TEST_CASE("spectra satisfy trace identities") {
    InputSpec spec;
    spec.dist = Distribution::Gaussian;
    spec.seed = 1234;
    SymmetricMatrix m = build_block_matrix(Model::TBT, 5, 6, spec);
    Spectrum s = eigenvalues_symmetric(m);

    double trace = 0.0, frob = 0.0;
    double max_entry = 0.0;
    for (int i = 0; i < m.dim(); ++i) {
        trace += m(i, i);
        for (int j = 0; j < m.dim(); ++j) {
            frob += m(i, j) * m(i, j);
            max_entry = std::max(max_entry, std::abs(m(i, j)));
        }
    }
    double sum1 = 0.0, sum2 = 0.0;
    for (double ev : s.eigenvalues) {
        sum1 += ev;
        sum2 += ev * ev;
    }
    const double tol = 1e-8 * m.dim() * std::max(1.0, max_entry);
    CHECK(std::abs(sum1 - trace) < tol);
    CHECK(std::abs(sum2 - frob) < tol * std::max(1.0, max_entry));
}

TEST_CASE("shifting the matrix shifts the spectrum") {
    InputSpec spec;
    spec.seed = 777;
    SymmetricMatrix m = build_block_matrix(Model::TBI, 4, 4, spec);
    Spectrum base = eigenvalues_symmetric(m);
    for (double c : {-1.0, 0.5}) {
        SymmetricMatrix shifted = m;
        for (int i = 0; i < m.dim(); ++i) shifted(i, i) += c;
        Spectrum s = eigenvalues_symmetric(shifted);
        REQUIRE(s.eigenvalues.size() == base.eigenvalues.size());
        for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
            CHECK(s.eigenvalues[i] ==
                  doctest::Approx(base.eigenvalues[i] + c).scale(1.0).epsilon(1e-10));
    }
}

TEST_CASE("moments of explicit spectra") {
    Spectrum pm;
    pm.dim = 2;
    pm.eigenvalues = {-1.0, 1.0};
    EmpiricalMoments m = esd_moments(pm, 1.0, 4);
    CHECK(m.h_max == 4);
    CHECK(m.replicates == 1);
    REQUIRE(m.beta_hat.size() == 4);
    CHECK(m.beta_hat[0] == 0.0);
    CHECK(m.beta_hat[1] == 1.0);
    CHECK(m.beta_hat[2] == 0.0);
    CHECK(m.beta_hat[3] == 1.0);
    for (double se : m.std_error) CHECK(se == 0.0);

    Spectrum point;
    point.dim = 1;
    point.eigenvalues = {2.0};
    EmpiricalMoments p = esd_moments(point, 2.0, 3);
    CHECK(p.beta_hat[0] == 1.0);
    CHECK(p.beta_hat[1] == 1.0);
    CHECK(p.beta_hat[2] == 1.0);

    CHECK_THROWS_AS(esd_moments(pm, 0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(esd_moments(pm, 1.0, 0), std::invalid_argument);
}

TEST_CASE("trace moments equal eigenvalue moments") {
    InputSpec spec;
    spec.dist = Distribution::Uniform;
    spec.seed = 2718;
    for (Model model : {Model::TBI, Model::TBT}) {
        SymmetricMatrix m = build_block_matrix(model, 4, 5, spec);
        Spectrum s = eigenvalues_symmetric(m);
        const double scale = 3.0;
        EmpiricalMoments em = esd_moments(s, scale, 8);
        for (int h = 1; h <= 8; ++h) {
            double tm = trace_moment(m, h, scale);
            double reference = em.beta_hat[static_cast<std::size_t>(h) - 1];
            double denom = std::max(std::abs(reference), 1e-12);
            CHECK(std::abs(tm - reference) / denom < 1e-8);
        }
    }
    CHECK_THROWS_AS(trace_moment(SymmetricMatrix(2), 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(trace_moment(SymmetricMatrix(2), 2, 0.0), std::invalid_argument);
}

TEST_CASE("histogram densities integrate to one") {
    InputSpec spec;
    spec.seed = 99;
    SymmetricMatrix m = build_block_matrix(Model::TBT, 8, 8, spec);
    Spectrum s = eigenvalues_symmetric(m);
    for (int bins : {0, 1, 7, 40}) {
        auto hist = histogram(s, 8.0, bins);
        if (bins > 0) CHECK(hist.size() == static_cast<std::size_t>(bins));
        double mass = 0.0;
        for (const auto& b : hist) {
            CHECK(b.right > b.left);
            CHECK(b.density >= 0.0);
            mass += (b.right - b.left) * b.density;
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    }
    // bins <= 0 defaults to ceil(sqrt(N)).
    auto def = histogram(s, 8.0, 0);
    CHECK(def.size() == static_cast<std::size_t>(std::ceil(std::sqrt(64.0))));
}

TEST_CASE("degenerate spectra widen to a unit box") {
    Spectrum flat;
    flat.dim = 3;
    flat.eigenvalues = {2.0, 2.0, 2.0};
    auto hist = histogram(flat, 1.0, 4);
    CHECK(hist.front().left == doctest::Approx(1.5));
    CHECK(hist.back().right == doctest::Approx(2.5));
    double mass = 0.0;
    for (const auto& b : hist) mass += (b.right - b.left) * b.density;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("histogram argument validation") {
    Spectrum empty;
    CHECK_THROWS_AS(histogram(empty, 1.0, 4), std::invalid_argument);
    Spectrum one;
    one.dim = 1;
    one.eigenvalues = {1.0};
    CHECK_THROWS_AS(histogram(one, -1.0, 4), std::invalid_argument);
}

TEST_CASE("asymmetric and empty inputs are rejected") {
    SymmetricMatrix bad(2);
    bad(0, 1) = 1.0;
    bad(1, 0) = 0.0;
    CHECK_THROWS_AS(eigenvalues_symmetric(bad), std::invalid_argument);
    CHECK_THROWS_AS(eigenvalues_symmetric(SymmetricMatrix{}), std::invalid_argument);
}
