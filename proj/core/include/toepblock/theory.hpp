#pragma once

#include <string>
#include <vector>

#include "toepblock/counting.hpp"
#include "toepblock/matrix.hpp"

namespace toepblock {

enum class Regime { FixedK, FixedN, BothLarge };

const char* regime_name(Regime regime);
Regime parse_regime(const std::string& name);

struct TheoreticalMoments {
    Model model;
    Regime regime;
    int size = 0;                // the pinned dimension for FixedK / FixedN
    std::vector<double> beta2t;  // beta2t[i] is the (2i+2)-th moment

    int t_max() const { return static_cast<int>(beta2t.size()); }

    // beta_h for 0 <= h <= 2*t_max; odd moments are exactly 0.
    double moment(int h) const;
};

// Grid used to extrapolate p(w) factors: {20, 40, 80, 160}.
const std::vector<int>& default_p_grid();

// Limit moments of the scaled block ensembles.
//
//   TBI, fixed k:   sum over Catalan words of the normalized (-1,...,-1)
//                   sym-Toeplitz class count at size k.
//   TBI, fixed n:   sum over all pair-matched words of the normalized
//                   (-1,...,-1) Wigner class count at size n times p_T(w).
//   TBI, both big:  Catalan numbers (semicircle moments).
//   TBT, fixed s:   sum over all words of the normalized (-1,...,-1)
//                   sym-Toeplitz class count at the pinned size times p_T(w);
//                   the same formula serves fixed k and fixed n.
//   TBT, both big:  sum over all words of p_T(w) squared.
//
// fixed_size is required (>= 1) for FixedK / FixedN and ignored for
// BothLarge. p_T(w) factors come from estimate_p over p_grid. 1 <= t_max <= 5.
TheoreticalMoments theoretical_moments(Model model, Regime regime, int t_max, int fixed_size = 0,
                                       const std::vector<int>& p_grid = default_p_grid(),
                                       const CountBudget& budget = {});

}  // namespace toepblock
