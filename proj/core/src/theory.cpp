#include "toepblock/theory.hpp"

#include <map>
#include <stdexcept>

namespace toepblock {

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::FixedK: return "fixed_k";
        case Regime::FixedN: return "fixed_n";
        case Regime::BothLarge: return "both_large";
    }
    return "?";
}

Regime parse_regime(const std::string& name) {
    if (name == "fixed_k") return Regime::FixedK;
    if (name == "fixed_n") return Regime::FixedN;
    if (name == "both_large") return Regime::BothLarge;
    throw std::invalid_argument("unknown regime: " + name);
}

double TheoreticalMoments::moment(int h) const {
    if (h < 0 || h > 2 * t_max()) {
        throw std::out_of_range("moment order outside the evaluated range");
    }
    if (h == 0) return 1.0;
    if (h % 2 == 1) return 0.0;
    return beta2t[static_cast<std::size_t>(h / 2 - 1)];
}

const std::vector<int>& default_p_grid() {
    static const std::vector<int> grid{20, 40, 80, 160};
    return grid;
}

namespace {

SignVector minus_ones(int t) {
    SignVector l;
    l.entries.assign(static_cast<std::size_t>(t), -1);
    return l;
}

class PCache {
public:
    PCache(std::vector<int> grid, CountBudget budget)
        : grid_(std::move(grid)), budget_(budget) {}

    double p_toeplitz(const Word& w) {
        auto it = cache_.find(w.letters());
        if (it != cache_.end()) return it->second;
        const double p = estimate_p(LinkKind::SymToeplitz, w, grid_, budget_).p_hat;
        cache_.emplace(w.letters(), p);
        return p;
    }

private:
    std::vector<int> grid_;
    CountBudget budget_;
    std::map<std::string, double> cache_;
};

}  // namespace

TheoreticalMoments theoretical_moments(Model model, Regime regime, int t_max, int fixed_size,
                                       const std::vector<int>& p_grid,
                                       const CountBudget& budget) {
    if (t_max < 1 || t_max > 5) {
        throw std::invalid_argument("t_max must be between 1 and 5");
    }
    if (regime != Regime::BothLarge && fixed_size < 1) {
        throw std::invalid_argument("fixed_k / fixed_n regimes need the pinned size");
    }

    TheoreticalMoments out;
    out.model = model;
    out.regime = regime;
    out.size = regime == Regime::BothLarge ? 0 : fixed_size;

    PCache pt(p_grid, budget);
    for (int t = 1; t <= t_max; ++t) {
        const SignVector l0 = minus_ones(t);
        double beta = 0.0;
        for (const Word& w : enumerate_pair_matched(t)) {
            if (model == Model::TBI) {
                switch (regime) {
                    case Regime::FixedK:
                        if (is_catalan(w)) {
                            beta += count_pi_star_signed(LinkKind::SymToeplitz, fixed_size, w, l0,
                                                         budget)
                                        .normalized;
                        }
                        break;
                    case Regime::FixedN:
                        beta += count_pi_star_signed(LinkKind::Wigner, fixed_size, w, l0, budget)
                                    .normalized *
                                pt.p_toeplitz(w);
                        break;
                    case Regime::BothLarge:
                        if (is_catalan(w)) beta += 1.0;
                        break;
                }
            } else {
                if (regime == Regime::BothLarge) {
                    const double p = pt.p_toeplitz(w);
                    beta += p * p;
                } else {
                    beta += count_pi_star_signed(LinkKind::SymToeplitz, fixed_size, w, l0, budget)
                                .normalized *
                            pt.p_toeplitz(w);
                }
            }
        }
        out.beta2t.push_back(beta);
    }
    return out;
}

}  // namespace toepblock
