#pragma once

#include <stdexcept>
#include <vector>

#include "toepblock/matrix.hpp"

namespace toepblock {

struct Spectrum {
    int dim = 0;
    std::vector<double> eigenvalues;  // ascending
    double scale = 1.0;               // normalizer the eigenvalues are reported against
};

class EigensolverError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All eigenvalues of a real symmetric matrix, ascending; the returned scale
// is 1. Householder reduction to tridiagonal form followed by implicit-shift
// iteration on the tridiagonal; eigenvectors are never formed. Off-diagonals
// deflate at 1e-14 * (|d_i| + |d_{i+1}|); 50 sweeps per eigenvalue, beyond
// which EigensolverError is thrown. Input must be symmetric within 1e-12 of
// its largest entry, else std::invalid_argument.
Spectrum eigenvalues_symmetric(const SymmetricMatrix& m);

struct EmpiricalMoments {
    int h_max = 0;
    std::vector<double> beta_hat;   // beta_hat[h-1] for h = 1..h_max
    int replicates = 1;
    std::vector<double> std_error;  // zero for a single replicate
};

// beta_h = (1/N) sum_i (lambda_i / scale)^h for h = 1..h_max.
EmpiricalMoments esd_moments(const Spectrum& spec, double scale, int h_max);

// (1/N) Tr((M/scale)^h) by matrix powers: powers up to ceil(h/2) are formed
// and the trace is taken as a Frobenius contraction. No eigendecomposition.
double trace_moment(const SymmetricMatrix& m, int h, double scale);

struct HistogramBin {
    double left = 0;
    double right = 0;
    double density = 0;
};

// Equal-width bins over [min, max] of the scaled eigenvalues; the last bin is
// closed on the right, so densities integrate to exactly 1. bins <= 0 picks
// ceil(sqrt(N)). A degenerate range widens to +/- 0.5 around the point mass.
std::vector<HistogramBin> histogram(const Spectrum& spec, double scale, int bins);

}  // namespace toepblock
