#pragma once

#include <string>
#include <vector>

#include "toepblock/counting.hpp"
#include "toepblock/input.hpp"
#include "toepblock/matrix.hpp"
#include "toepblock/spectral.hpp"
#include "toepblock/theory.hpp"

namespace toepblock {

struct RunConfig {
    Model model = Model::TBI;
    Regime regime = Regime::BothLarge;
    int n = 32;                   // block size
    int k = 32;                   // number of block rows
    int replicates = 50;
    InputSpec input;
    int h_max = 6;                // even, at most 10
    int bins = 0;                 // histogram bins, <= 0 picks automatically
    int jobs = 1;                 // replicates run concurrently up to this
    bool keep_eigenvalues = false;
    CountBudget budget;           // forwarded to the theoretical formulas
};

// nk <= 4096, replicates >= 1, h_max even in [2, 10], sizes >= 1.
void validate(const RunConfig& cfg);

struct StageTiming {
    std::string stage;
    double seconds = 0;
};

struct SimReport {
    RunConfig config;
    double scale = 0;                 // sqrt(nk)
    EmpiricalMoments empirical;       // aggregated over replicates
    bool has_theory = false;
    std::vector<double> theoretical;  // beta_h, h = 1..h_max; odd entries 0
    std::vector<double> z_scores;     // (empirical - theory) / stderr; NaN if no stderr
    std::vector<HistogramBin> hist;   // pooled over all replicates
    std::vector<Spectrum> spectra;    // per replicate, only when keep_eigenvalues
    std::vector<StageTiming> timing;
    std::string note;                 // surfaced config choices / theory fallbacks
};

// Samples cfg.replicates independent matrices (replicate r uses the stream
// seed derived from the master seed and r), normalizes by sqrt(nk), and
// aggregates moments and the pooled histogram. Theoretical moments for the
// declared regime are attached when the counting budget allows them.
// Deterministic given the seed, up to the timing fields.
SimReport run_simulation(const RunConfig& cfg);

struct ConvergencePoint {
    int size = 0;                     // the pinned size at this grid point
    std::vector<double> theory_even;  // beta_{2t}, t = 1..t_max
    std::vector<double> gap;          // |beta_{2t}(size) - limit|
    bool has_empirical = false;
    EmpiricalMoments empirical;
};

struct ConvergenceReport {
    Model model;
    Regime regime;
    int t_max = 0;
    std::vector<double> limit_even;   // both-large beta_{2t}
    std::vector<ConvergencePoint> points;
    std::vector<StageTiming> timing;
    std::string note;
};

// grid: >= 3 configs sharing model and a pinned-size regime (fixed_k or
// fixed_n), with the pinned size strictly increasing. Evaluates the exact
// regime formula at each size and the gap to the both-large value; configs
// with replicates >= 1 also contribute an empirical moment trajectory
// (replicates == 0 skips simulation for that point).
ConvergenceReport run_convergence(const std::vector<RunConfig>& grid);

}  // namespace toepblock
