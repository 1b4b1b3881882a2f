#ifndef MINTS_DECODER_HPP
#define MINTS_DECODER_HPP

#include <map>
#include <string>
#include <vector>

#include "mints/direction.hpp"
#include "mints/rational.hpp"
#include "mints/scheme.hpp"

namespace mints::decoder {

struct DecodeOutcome {
  enum class Kind { AllGenuine, FakeSet, Inconsistent };

  Kind kind = Kind::AllGenuine;
  SubsetMask fake = 0;  // set only for FakeSet
  std::string reason;   // set only for Inconsistent

  static DecodeOutcome all_genuine() { return DecodeOutcome{}; }
  static DecodeOutcome fake_set(SubsetMask mask) {
    return DecodeOutcome{Kind::FakeSet, mask, {}};
  }
  static DecodeOutcome inconsistent(std::string why) {
    return DecodeOutcome{Kind::Inconsistent, 0, std::move(why)};
  }

  bool operator==(const DecodeOutcome& o) const {
    return kind == o.kind && fake == o.fake;
  }
};

// Exact weighing totals when the mints in `fake` produce coins of weight
// W(1 + eps) and the rest weigh W: total_j = sum_r rows[j][r] * W * (1 + d_r eps).
// eps must be nonzero unless the fake set is empty; W must be positive.
std::vector<Rational> simulate_weighings(const Scheme& scheme, const Rational& genuine_weight,
                                         const Rational& epsilon, SubsetMask fake);

// Canonical direction of each non-empty subset sum, mapped back to the
// subset. Injective exactly when the scheme is feasible; an infeasible
// scheme raises InfeasibleSchemeError.
using RatioTable = std::map<Direction, SubsetMask>;
RatioTable ratio_table(const Scheme& scheme);

// Recover the fake set from two observed weighing totals. The deviations
// (a, b) = (observed_0 - W * sum P, observed_1 - W * sum Q) equal
// eps * W * S_K, so their direction looks up K in the ratio table. Both
// deviations zero means every mint is genuine.
DecodeOutcome decode(const Scheme& scheme, const RatioTable& table,
                     const Rational& genuine_weight, const std::vector<Rational>& observed);
DecodeOutcome decode(const Scheme& scheme, const Rational& genuine_weight,
                     const std::vector<Rational>& observed);

}  // namespace mints::decoder

#endif  // MINTS_DECODER_HPP
