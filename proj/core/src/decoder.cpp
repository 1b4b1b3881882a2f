#include "mints/decoder.hpp"

#include <numeric>

#include "mints/int128.hpp"
#include "mints/verify.hpp"

namespace mints::decoder {

std::vector<Rational> simulate_weighings(const Scheme& scheme, const Rational& genuine_weight,
                                         const Rational& epsilon, SubsetMask fake) {
  if (!genuine_weight.is_positive()) throw ConfigError("genuine weight must be positive");
  if (fake >= (SubsetMask{1} << scheme.mints()))
    throw ConfigError("fake mask has bits beyond the scheme's mints");
  if (epsilon.is_zero() && fake != 0)
    throw ConfigError("epsilon must be nonzero when any mint is fake");

  std::vector<Rational> totals;
  totals.reserve(scheme.weighings());
  for (int j = 0; j < scheme.weighings(); ++j) {
    long long base = 0, faked = 0;
    for (int r = 0; r < scheme.mints(); ++r) {
      base += scheme.entry(j, r);
      if (fake & (SubsetMask{1} << r)) faked += scheme.entry(j, r);
    }
    totals.push_back(genuine_weight * (Rational(base) + epsilon * Rational(faked)));
  }
  return totals;
}

RatioTable ratio_table(const Scheme& scheme) {
  RatioTable table;
  const SubsetMask full = SubsetMask{1} << scheme.mints();
  for (SubsetMask m = 1; m < full; ++m) {
    const auto [it, inserted] = table.emplace(canonical_direction(subset_sum(scheme, m)), m);
    if (!inserted)
      throw InfeasibleSchemeError("scheme is infeasible: subsets " + std::to_string(it->second) +
                                  " and " + std::to_string(m) + " share a direction");
  }
  return table;
}

DecodeOutcome decode(const Scheme& scheme, const RatioTable& table,
                     const Rational& genuine_weight, const std::vector<Rational>& observed) {
  if (scheme.weighings() != 2) throw ConfigError("decode handles exactly two weighings");
  if (observed.size() != 2) throw ConfigError("decode expects exactly two observed totals");
  if (!genuine_weight.is_positive()) throw ConfigError("genuine weight must be positive");

  // Deviations from the all-genuine totals; exact rationals throughout.
  Rational dev[2];
  for (int j = 0; j < 2; ++j) {
    long long base = 0;
    for (int r = 0; r < scheme.mints(); ++r) base += scheme.entry(j, r);
    dev[j] = observed[j] - genuine_weight * Rational(base);
  }
  if (dev[0].is_zero() && dev[1].is_zero()) return DecodeOutcome::all_genuine();

  // Scale to an integer vector by the common denominator, then look the
  // direction up. Rational pairs that are no multiple of any subset sum
  // simply miss the table.
  const long long lcm = std::lcm(dev[0].den(), dev[1].den());
  IntVector v;
  v.coords = {checked_mul(dev[0].num(), lcm / dev[0].den()),
              checked_mul(dev[1].num(), lcm / dev[1].den())};
  const auto it = table.find(canonical_direction(v));
  if (it == table.end())
    return DecodeOutcome::inconsistent("unknown direction: deviations match no fake set");
  return DecodeOutcome::fake_set(it->second);
}

DecodeOutcome decode(const Scheme& scheme, const Rational& genuine_weight,
                     const std::vector<Rational>& observed) {
  return decode(scheme, ratio_table(scheme), genuine_weight, observed);
}

}  // namespace mints::decoder
