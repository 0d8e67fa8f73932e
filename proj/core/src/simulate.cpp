#include "toepblock/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toepblock/parallel.hpp"

namespace toepblock {

namespace {

class StageClock {
public:
    explicit StageClock(std::vector<StageTiming>& out) : out_(out) {}

    void start(std::string stage) {
        stage_ = std::move(stage);
        begin_ = std::chrono::steady_clock::now();
    }

    void stop() {
        auto end = std::chrono::steady_clock::now();
        double seconds = std::chrono::duration<double>(end - begin_).count();
        out_.push_back({stage_, seconds});
    }

private:
    std::vector<StageTiming>& out_;
    std::string stage_;
    std::chrono::steady_clock::time_point begin_;
};

void append_note(std::string& note, const std::string& line) {
    if (!note.empty()) note += "; ";
    note += line;
}

int pinned_size(const RunConfig& cfg) {
    return cfg.regime == Regime::FixedK ? cfg.k : cfg.n;
}

}  // namespace

void validate(const RunConfig& cfg) {
    if (cfg.n < 1 || cfg.k < 1) throw std::invalid_argument("run config: n and k must be >= 1");
    if (static_cast<long long>(cfg.n) * cfg.k > 4096)
        throw std::invalid_argument("run config: n*k must be <= 4096");
    if (cfg.replicates < 1) throw std::invalid_argument("run config: replicates must be >= 1");
    if (cfg.h_max < 2 || cfg.h_max > 10 || cfg.h_max % 2 != 0)
        throw std::invalid_argument("run config: h_max must be even and in [2, 10]");
    if (cfg.bins < 0) throw std::invalid_argument("run config: bins must be >= 0");
    if (cfg.jobs < 1) throw std::invalid_argument("run config: jobs must be >= 1");
}

SimReport run_simulation(const RunConfig& cfg) {
    validate(cfg);

    SimReport report;
    report.config = cfg;
    const int dim = cfg.n * cfg.k;
    report.scale = std::sqrt(static_cast<double>(dim));

    StageClock clock(report.timing);

    clock.start("theory");
    const int t_max = cfg.h_max / 2;
    try {
        TheoreticalMoments theory = theoretical_moments(
            cfg.model, cfg.regime, t_max, cfg.regime == Regime::BothLarge ? 0 : pinned_size(cfg),
            default_p_grid(), cfg.budget);
        report.theoretical.resize(cfg.h_max);
        for (int h = 1; h <= cfg.h_max; ++h) report.theoretical[h - 1] = theory.moment(h);
        report.has_theory = true;
    } catch (const BudgetExceeded& err) {
        report.has_theory = false;
        append_note(report.note, std::string("theoretical moments skipped: ") + err.what());
    }
    if (cfg.regime == Regime::BothLarge) {
        append_note(report.note, "both-large theory is the joint limit; this run samples n=" +
                                     std::to_string(cfg.n) + ", k=" + std::to_string(cfg.k));
    }
    clock.stop();

    clock.start("replicates");
    const int reps = cfg.replicates;
    std::vector<std::vector<double>> rep_moments(reps);
    std::vector<std::vector<double>> rep_eigen(reps);
    parallel_chunks(cfg.jobs, reps, [&](int, int begin, int end) {
        for (int r = begin; r < end; ++r) {
            InputSpec rep_input = cfg.input;
            rep_input.seed = replicate_seed(cfg.input.seed, static_cast<std::uint64_t>(r));
            SymmetricMatrix mat = build_block_matrix(cfg.model, cfg.k, cfg.n, rep_input);
            Spectrum spectrum;
            try {
                spectrum = eigenvalues_symmetric(mat);
            } catch (const EigensolverError& err) {
                throw EigensolverError("replicate " + std::to_string(r) + ": " + err.what());
            }
            spectrum.scale = report.scale;
            rep_moments[r] = esd_moments(spectrum, report.scale, cfg.h_max).beta_hat;
            rep_eigen[r] = std::move(spectrum.eigenvalues);
        }
    });
    clock.stop();

    clock.start("aggregate");
    report.empirical.h_max = cfg.h_max;
    report.empirical.replicates = reps;
    report.empirical.beta_hat.assign(cfg.h_max, 0.0);
    report.empirical.std_error.assign(cfg.h_max, 0.0);
    for (int h = 0; h < cfg.h_max; ++h) {
        double mean = 0;
        for (int r = 0; r < reps; ++r) mean += rep_moments[r][h];
        mean /= reps;
        report.empirical.beta_hat[h] = mean;
        if (reps > 1) {
            double ss = 0;
            for (int r = 0; r < reps; ++r) {
                double d = rep_moments[r][h] - mean;
                ss += d * d;
            }
            report.empirical.std_error[h] = std::sqrt(ss / (reps - 1)) / std::sqrt(double(reps));
        }
    }

    if (report.has_theory) {
        report.z_scores.assign(cfg.h_max, std::numeric_limits<double>::quiet_NaN());
        for (int h = 0; h < cfg.h_max; ++h) {
            double se = report.empirical.std_error[h];
            if (se > 0)
                report.z_scores[h] = (report.empirical.beta_hat[h] - report.theoretical[h]) / se;
        }
    }

    Spectrum pooled;
    pooled.scale = report.scale;
    pooled.eigenvalues.reserve(static_cast<std::size_t>(dim) * reps);
    for (int r = 0; r < reps; ++r)
        pooled.eigenvalues.insert(pooled.eigenvalues.end(), rep_eigen[r].begin(),
                                  rep_eigen[r].end());
    pooled.dim = static_cast<int>(pooled.eigenvalues.size());
    std::sort(pooled.eigenvalues.begin(), pooled.eigenvalues.end());
    report.hist = histogram(pooled, report.scale, cfg.bins);

    if (cfg.keep_eigenvalues) {
        report.spectra.reserve(reps);
        for (int r = 0; r < reps; ++r) {
            Spectrum s;
            s.dim = dim;
            s.scale = report.scale;
            s.eigenvalues = std::move(rep_eigen[r]);
            report.spectra.push_back(std::move(s));
        }
    }
    clock.stop();

    return report;
}

ConvergenceReport run_convergence(const std::vector<RunConfig>& grid) {
    if (grid.size() < 3)
        throw std::invalid_argument("convergence study needs at least 3 grid points");
    const RunConfig& head = grid.front();
    if (head.regime != Regime::FixedK && head.regime != Regime::FixedN)
        throw std::invalid_argument("convergence study needs a pinned-size regime");
    for (const RunConfig& cfg : grid) {
        if (cfg.model != head.model || cfg.regime != head.regime)
            throw std::invalid_argument("convergence grid must share model and regime");
        if (cfg.h_max != head.h_max)
            throw std::invalid_argument("convergence grid must share h_max");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (pinned_size(grid[i]) <= pinned_size(grid[i - 1]))
            throw std::invalid_argument("convergence grid sizes must be strictly increasing");
    }

    ConvergenceReport report;
    report.model = head.model;
    report.regime = head.regime;
    report.t_max = head.h_max / 2;

    StageClock clock(report.timing);

    clock.start("limit");
    TheoreticalMoments limit =
        theoretical_moments(head.model, Regime::BothLarge, report.t_max, 0, default_p_grid(),
                            head.budget);
    report.limit_even = limit.beta2t;
    clock.stop();

    clock.start("points");
    for (const RunConfig& cfg : grid) {
        ConvergencePoint point;
        point.size = pinned_size(cfg);
        TheoreticalMoments theory = theoretical_moments(
            cfg.model, cfg.regime, report.t_max, point.size, default_p_grid(), cfg.budget);
        point.theory_even = theory.beta2t;
        point.gap.resize(theory.beta2t.size());
        for (std::size_t t = 0; t < theory.beta2t.size(); ++t)
            point.gap[t] = std::abs(theory.beta2t[t] - report.limit_even[t]);
        if (cfg.replicates >= 1) {
            point.has_empirical = true;
            point.empirical = run_simulation(cfg).empirical;
        }
        report.points.push_back(std::move(point));
    }
    clock.stop();

    return report;
}

}  // namespace toepblock
