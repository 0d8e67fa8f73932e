#pragma once

#include <string>
#include <vector>

#include "toepblock/address.hpp"
#include "toepblock/counting.hpp"

namespace toepblock {

struct VerifyCheck {
    std::string name;    // identity being checked, with its parameters
    bool pass = false;
    std::string detail;  // observed vs expected on failure, summary on success
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;
    std::vector<DecompositionReport> decompositions;  // decomposition suite only
    bool pass = false;

    // Name of the first failing check, empty when everything passed.
    std::string first_failure() const;
};

// Runs one of the self-check suites.
//
//   counting-oracle  count_pi_star against a direct scan of all dim^(2t)
//                    closed circuits, every word with t <= 2, every link,
//                    dimensions up to 6.
//   lemmas           sign-class behaviour on documented grids: the union of
//                    all sign classes matches the unsigned class, non-trivial
//                    sign classes decay, the all-minus class approaches the
//                    unsigned count, and Catalan normalized counts settle
//                    near 1 under both sym-Toeplitz and Wigner links.
//   decomposition    block/entry address identities (composite count = fiber
//                    sum = entry sum, with the product sandwich) for t <= 2,
//                    both models, n, k in {2, 3, 4}.
//   all              every suite above.
VerifyReport run_verification(const std::string& suite, const CountBudget& budget = {});

}  // namespace toepblock
