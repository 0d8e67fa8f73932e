#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "toepblock/links.hpp"
#include "toepblock/words.hpp"

namespace toepblock {

// One entry per letter in first-occurrence order (the order the non-zero
// generating vertices appear), each +1 or -1.
struct SignVector {
    std::vector<int> entries;

    bool operator==(const SignVector& o) const { return entries == o.entries; }
    bool operator<(const SignVector& o) const { return entries < o.entries; }
};

// All 2^t sign vectors; (-1,...,-1) first.
std::vector<SignVector> all_sign_vectors(int t);

// Per-letter admissible signs, used for set-unions of sign classes.
struct SignChoice {
    bool plus = false;
    bool minus = false;
};

struct CountBudget {
    double max_nodes = 1e10;  // refuse when the node estimate exceeds this
    int jobs = 1;             // top-level enumeration chunks run concurrently
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(double estimate, double max_nodes);

    double estimate() const { return estimate_; }
    double max_nodes() const { return max_nodes_; }

private:
    double estimate_;
    double max_nodes_;
};

struct CountResult {
    Word word;
    LinkKind link;
    int n;                          // full matrix dimension (n*k when composite)
    std::optional<SignVector> sign;
    std::uint64_t count;
    double normalized;              // count / n^(t+1)
};

// Exact number of circuits pi over {1..dim} with pi(0)=pi(2t) such that equal
// letters of w produce equal labels. Enumerates the t+1 generating values and
// propagates constraints to the dependent positions.
CountResult count_pi_star(const Link& link, const Word& w, const CountBudget& budget = {});
CountResult count_pi_star(LinkKind kind, int n, const Word& w, const CountBudget& budget = {});

// Sign-restricted class. SymToeplitz: the second slope of letter i equals
// l_i times the first. Wigner: the second ordered pair repeats the first when
// l_i = +1 and is swapped when l_i = -1. Other links have no sign refinement.
CountResult count_pi_star_signed(const Link& link, const Word& w, const SignVector& l,
                                 const CountBudget& budget = {});
CountResult count_pi_star_signed(LinkKind kind, int n, const Word& w, const SignVector& l,
                                 const CountBudget& budget = {});

// Size of the set-union of the sign classes generated by the per-letter
// choices (classes overlap on zero slopes and doubled pairs, so this is not a
// sum). Allowing both signs for every letter recovers the unsigned count.
// SymToeplitz and Wigner only.
std::uint64_t count_sign_union(const Link& link, const Word& w,
                               const std::vector<SignChoice>& allowed,
                               const CountBudget& budget = {});

struct PFit {
    double p_hat = 0.0;
    double residual = 0.0;           // root-mean-square fit residual
    std::vector<int> grid;
    std::vector<double> normalized;  // observed count/n^(t+1) per grid point
};

// Least-squares fit of normalized counts to p + c/n over an ascending grid of
// at least three sizes.
PFit estimate_p(LinkKind kind, const Word& w, const std::vector<int>& n_grid,
                const CountBudget& budget = {});

}  // namespace toepblock
