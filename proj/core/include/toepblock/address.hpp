#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "toepblock/counting.hpp"
#include "toepblock/matrix.hpp"
#include "toepblock/words.hpp"

namespace toepblock {

// Closed index path pi(0..h) stored with all h+1 positions, pi[h] == pi[0].
using Circuit = std::vector<int>;

// An identity the module is supposed to certify failed on a concrete input.
class VerificationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// pi over {1..nk} splits position-wise into a block circuit over {1..k} and
// an entry circuit over {1..n}: pi(i) = (pi_b(i)-1)*n + pi_e(i).
Circuit block_address(const Circuit& pi, int n);
Circuit entry_address(const Circuit& pi, int n);
Circuit compose(const Circuit& pi_b, const Circuit& pi_e, int n);

// True iff equal letters of w give equal labels along the circuit.
bool circuit_matched(const Link& link, const Word& w, const Circuit& pi);

// All matched circuits for w over {1..dim}, odometer order. Meant for small
// dimensions: cost is dim^(2t) regardless of the match structure.
std::vector<Circuit> enumerate_pi_star(const Link& link, const Word& w,
                                       const CountBudget& budget = {});

// Number of composite circuits for w whose block address equals pi_b, where
// pi_b must itself be matched under the symmetric Toeplitz link. Computed two
// ways: directly, and as the set-union of the entry-level sign classes whose
// signs are compatible with pi_b's block slopes (Wigner classes for TBI,
// sym-Toeplitz classes for TBT). Disagreement throws VerificationError.
std::uint64_t fiber_size(const Circuit& pi_b, const Word& w, Model model, int n,
                         const CountBudget& budget = {});

struct SandwichCheck {
    std::uint64_t lower = 0;
    std::uint64_t value = 0;
    std::uint64_t upper = 0;
    bool pass = false;
};

struct DecompositionReport {
    Word word;
    int n = 0;
    int k = 0;
    Model model;
    std::uint64_t composite_count = 0;  // matched circuits over {1..nk}
    std::uint64_t fiber_sum = 0;        // sum of fiber sizes over the block class
    std::uint64_t entry_sum = 0;        // same partition taken along entry circuits
    SandwichCheck sandwich;
    bool pass = false;
};

// Certifies, by exact enumeration, that the composite class decomposes along
// block addresses and along entry addresses, and that the product sandwich
//   (signed entry count)(signed block count) <= composite <= (entry)(block)
// holds. The entry-side link is Wigner for TBI, sym-Toeplitz for TBT.
DecompositionReport verify_decomposition(const Word& w, int n, int k, Model model,
                                         const CountBudget& budget = {});

}  // namespace toepblock
