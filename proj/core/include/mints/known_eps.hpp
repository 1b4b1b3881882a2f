#ifndef MINTS_KNOWN_EPS_HPP
#define MINTS_KNOWN_EPS_HPP

#include <optional>

#include "mints/oracle.hpp"
#include "mints/scheme.hpp"
#include "mints/search.hpp"
#include "mints/verify.hpp"

namespace mints::known_eps {

// When the fake-coin deviation is known, each weighing reveals its subset
// sum exactly, so a scheme works iff the map from subsets to sum vectors
// is injective over all 2^n subsets (the empty one included). Works for
// any number of weighings.
FeasibilityReport verify_injective(const Scheme& scheme);

// Minimum over injective schemes of the sum of per-mint maxima, for n
// mints and k weighings. Same status and determinism contract as
// search::search_optimal.
search::SearchResult search_known_eps(int n, int k, const search::Budget& budget = {},
                                      int threads = 1);

// Exhaustive reference enumeration for small n; shares only the domain
// types with the search it checks.
std::optional<oracle::MinCostResult> exhaustive_min_cost_injective(int n, int k,
                                                                   long long cost_ceiling);

}  // namespace mints::known_eps

#endif  // MINTS_KNOWN_EPS_HPP
