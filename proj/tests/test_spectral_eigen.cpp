#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "toepblock/spectral.hpp"

using namespace toepblock;

// Cross-validates the in-house eigensolver against Eigen's self-adjoint
// solver on the ensembles the library actually produces.

namespace {

Eigen::MatrixXd to_eigen(const SymmetricMatrix& m) {
    Eigen::MatrixXd out(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
    return out;
}

void compare(const SymmetricMatrix& m) {
    Spectrum ours = eigenvalues_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m),
                                                          Eigen::EigenvaluesOnly);
    REQUIRE(solver.info() == Eigen::Success);
    Eigen::VectorXd reference = solver.eigenvalues();

    REQUIRE(ours.eigenvalues.size() == static_cast<std::size_t>(reference.size()));
    double norm = std::max(1.0, std::abs(reference[0]));
    norm = std::max(norm, std::abs(reference[reference.size() - 1]));
    for (int i = 0; i < reference.size(); ++i) {
        CHECK(std::abs(ours.eigenvalues[static_cast<std::size_t>(i)] - reference[i]) <
              1e-10 * norm * m.dim());
    }
}

}  // namespace

TEST_CASE("block matrices across models, sizes, and distributions") {
    for (Model model : {Model::TBI, Model::TBT}) {
        for (Distribution dist : {Distribution::Rademacher, Distribution::Gaussian,
                                  Distribution::Uniform}) {
            for (int trial = 0; trial < 3; ++trial) {
                InputSpec spec;
                spec.dist = dist;
                spec.seed = 1000 + static_cast<std::uint64_t>(trial);
                compare(build_block_matrix(model, 6, 7, spec));
                compare(build_block_matrix(model, 2, 17, spec));
                compare(build_block_matrix(model, 17, 2, spec));
            }
        }
    }
}

TEST_CASE("patterned simple matrices") {
    for (LinkKind kind : {LinkKind::SymToeplitz, LinkKind::Wigner}) {
        for (int trial = 0; trial < 3; ++trial) {
            InputSpec spec;
            spec.dist = Distribution::Gaussian;
            spec.seed = 2000 + static_cast<std::uint64_t>(trial);
            compare(build_patterned(kind, 40, spec));
        }
    }
}
