#ifndef MINTS_VERIFY_HPP
#define MINTS_VERIFY_HPP

#include <optional>
#include <utility>

#include "mints/scheme.hpp"

namespace mints {

// Result of a feasibility check. When infeasible, witness holds the
// lexicographically smallest pair (mask1, mask2), mask1 < mask2 as
// integers, of distinct non-empty subsets whose sums are collinear (equal,
// for the known-eps injectivity check).
struct FeasibilityReport {
  bool feasible = false;
  std::optional<std::pair<SubsetMask, SubsetMask>> witness;
};

// A scheme solves the unknown-eps problem exactly when the canonical
// directions of all 2^n - 1 non-empty subset sums are pairwise distinct.
// The empty subset is excluded: the all-genuine case is identified by the
// zero reading, which no non-empty subset can produce since no column is
// zero.
FeasibilityReport verify_scheme(const Scheme& scheme);

}  // namespace mints

#endif  // MINTS_VERIFY_HPP
