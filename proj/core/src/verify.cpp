#include "mints/verify.hpp"

#include <bit>
#include <unordered_map>

#include "mints/direction.hpp"

namespace mints {

namespace {

struct MaskPair {
  SubsetMask first;
  SubsetMask second;  // 0 until a second member shows up
};

}  // namespace

FeasibilityReport verify_scheme(const Scheme& scheme) {
  const int n = scheme.mints();
  const int k = scheme.weighings();
  const SubsetMask full = SubsetMask{1} << n;

  // sums[m] = sum of the columns in mask m, built from sums[m without its
  // lowest bit]; coordinates stay far below the 128-bit range for any valid
  // scheme, but additions are checked regardless.
  std::vector<IntVector> sums(full);
  sums[0].coords.assign(k, 0);
  std::vector<IntVector> columns(n);
  for (int r = 0; r < n; ++r) columns[r] = subset_sum(scheme, SubsetMask{1} << r);

  std::unordered_map<Direction, MaskPair, DirectionHash> classes;
  classes.reserve(full);
  for (SubsetMask m = 1; m < full; ++m) {
    const int low = std::countr_zero(m);
    const IntVector& base = sums[m & (m - 1)];
    IntVector& v = sums[m];
    v.coords.resize(k);
    for (int j = 0; j < k; ++j) v.coords[j] = checked_add(base.coords[j], columns[low].coords[j]);

    auto [it, inserted] = classes.try_emplace(canonical_direction(v), MaskPair{m, 0});
    if (!inserted && it->second.second == 0) it->second.second = m;
  }

  std::optional<std::pair<SubsetMask, SubsetMask>> witness;
  for (const auto& [dir, pair] : classes) {
    if (pair.second == 0) continue;
    std::pair<SubsetMask, SubsetMask> cand{pair.first, pair.second};
    if (!witness || cand < *witness) witness = cand;
  }
  if (witness) return FeasibilityReport{false, witness};
  return FeasibilityReport{true, std::nullopt};
}

}  // namespace mints
