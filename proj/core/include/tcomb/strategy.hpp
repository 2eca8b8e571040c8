/*
Default proof search.

  1. Empty when there are no strict rules.
  2. Runtime problems: dependency tuples when innermost, weak dependency
     pairs otherwise.
  3. DP problems: predecessor estimation and weak suffix removal until
     neither applies.
  4. Complexity pair at degree 1.
  5. Dependency graph decomposition over forward-closed down-sets, sinks
     first and smallest first; both parts are solved recursively.
  6. Complexity pair at degree 2, if the degree cap allows.
  7. Problems that are not DP problems: complexity pairs on single strict
     rules split off with Decompose.

Whatever remains becomes an open assumption.
*/

#pragma once

#include "tcomb/proof.hpp"

#include <chrono>
#include <optional>

namespace tcomb {

struct StrategyOptions {
    unsigned degree_cap = 3;
    unsigned coeff_max = 3;
    std::optional<std::chrono::milliseconds> timeout;
    std::size_t dgd_candidates = 8;
};

ProofTree default_strategy(const Problem& p, const StrategyOptions& options = {});

} // namespace tcomb
