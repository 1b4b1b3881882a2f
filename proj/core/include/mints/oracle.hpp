#ifndef MINTS_ORACLE_HPP
#define MINTS_ORACLE_HPP

#include <optional>

#include "mints/scheme.hpp"
#include "mints/verify.hpp"

namespace mints::oracle {

// Reference implementations used for cross-checking. Kept deliberately
// small and literal; they share only the domain types with the main code
// paths they are checking.

// All-pairs collinearity test over the non-empty subset sums of a
// two-weighing scheme, via 2x2 cross products. Returns the first zero pair
// in (mask1, mask2) order.
FeasibilityReport naive_verify(const Scheme& scheme);

struct MinCostResult {
  long long cost = 0;
  Scheme scheme;
};

// Enumerates every two-weighing scheme with cost at most cost_ceiling (up
// to mint permutation) and returns a minimum-cost feasible one, or nullopt
// when none exists under the ceiling. Intended for small n only.
std::optional<MinCostResult> exhaustive_min_cost(int n, CostKind kind, long long cost_ceiling);

}  // namespace mints::oracle

#endif  // MINTS_ORACLE_HPP
