#ifndef MINTS_SCHEME_HPP
#define MINTS_SCHEME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mints/errors.hpp"

namespace mints {

// Largest coin count allowed in a single scheme entry. Keeps every subset
// sum and cross product comfortably inside 128-bit exact arithmetic.
inline constexpr long long kEntryMax = 1'000'000;

// Feasibility checks enumerate all 2^n subsets, so the number of mints is
// capped where that enumeration is still desk-scale.
inline constexpr int kMaxMints = 20;

// Rows are weighings; two for the classic problem, more for the known-eps
// generalization.
inline constexpr int kMaxWeighings = 8;

// Bit r set means mint r+1 is in the subset.
using SubsetMask = std::uint32_t;

// 1-based mint indices for a mask, ascending.
std::vector<int> mask_to_mints(SubsetMask mask);

// Inverse of mask_to_mints; indices must be in [1, n].
SubsetMask mints_to_mask(const std::vector<int>& mints, int n);

// A weighing scheme: k rows (weighings) of n non-negative coin counts.
// Invariants enforced at construction:
//   - at least one row, all rows the same length n >= 1, n <= kMaxMints
//   - every entry in [0, kEntryMax]
//   - every mint contributes to at least one weighing (no zero column)
class Scheme {
 public:
  explicit Scheme(std::vector<std::vector<long long>> rows);

  // Two-weighing scheme from the first and second weighing counts.
  static Scheme classic(std::vector<long long> first, std::vector<long long> second);

  int mints() const { return n_; }
  int weighings() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<long long>>& rows() const { return rows_; }
  long long entry(int weighing, int mint) const { return rows_[weighing][mint]; }
  std::vector<long long> column(int mint) const;

  bool operator==(const Scheme& other) const { return rows_ == other.rows_; }

 private:
  std::vector<std::vector<long long>> rows_;
  int n_;
};

enum class CostKind {
  TotalMax,  // sum over mints of the per-mint maximum count
  GrandSum,  // total coins placed across all weighings
  MaxEntry,  // largest single count
};

std::string cost_kind_name(CostKind kind);
std::optional<CostKind> cost_kind_from_name(const std::string& name);

long long cost(const Scheme& scheme, CostKind kind);

// Largest n for which the factorial construction fits under kEntryMax
// (9! = 362880; 10! would exceed it).
inline constexpr int kFactorialSchemeMaxMints = 9;

// The classic upper-bound construction: first weighing uses r! coins from
// mint r, second weighing one coin from each mint.
Scheme factorial_scheme(int n);

struct CapacityWitness {
  long long cap = 0;  // per-mint coin limit of the known scheme
  int mints = 0;      // number of mints that scheme tests
};

struct BoundsResult {
  long long lower = 0;
  long long upper = 0;
};

// Lower and upper bounds on the optimal TotalMax cost for n mints. The
// upper bound is the factorial-construction total, improved to cap*n when a
// capacity witness with at least n mints is supplied.
BoundsResult bounds(int n, std::optional<CapacityWitness> witness = std::nullopt);

}  // namespace mints

#endif  // MINTS_SCHEME_HPP
