#include "mints/scheme.hpp"

#include <algorithm>

#include "mints/int128.hpp"

namespace mints {

std::vector<int> mask_to_mints(SubsetMask mask) {
  std::vector<int> out;
  for (int r = 0; mask != 0; ++r, mask >>= 1) {
    if (mask & 1u) out.push_back(r + 1);
  }
  return out;
}

SubsetMask mints_to_mask(const std::vector<int>& mints, int n) {
  SubsetMask mask = 0;
  for (int m : mints) {
    if (m < 1 || m > n) throw ConfigError("mint index " + std::to_string(m) + " out of range 1.." + std::to_string(n));
    mask |= SubsetMask{1} << (m - 1);
  }
  return mask;
}

Scheme::Scheme(std::vector<std::vector<long long>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidSchemeError("scheme needs at least one weighing");
  if (rows_.size() > static_cast<std::size_t>(kMaxWeighings))
    throw InvalidSchemeError("scheme has more than " + std::to_string(kMaxWeighings) + " weighings");
  const std::size_t n = rows_[0].size();
  if (n == 0) throw InvalidSchemeError("scheme needs at least one mint");
  if (n > static_cast<std::size_t>(kMaxMints))
    throw InvalidSchemeError("scheme has more than " + std::to_string(kMaxMints) + " mints");
  for (const auto& row : rows_) {
    if (row.size() != n) throw InvalidSchemeError("weighing rows have unequal lengths");
    for (long long e : row) {
      if (e < 0) throw InvalidSchemeError("negative coin count");
      if (e > kEntryMax) throw InvalidSchemeError("coin count exceeds " + std::to_string(kEntryMax));
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    long long col = 0;
    for (const auto& row : rows_) col += row[r];
    if (col == 0)
      throw InvalidSchemeError("mint " + std::to_string(r + 1) + " is used in no weighing");
  }
  n_ = static_cast<int>(n);
}

Scheme Scheme::classic(std::vector<long long> first, std::vector<long long> second) {
  std::vector<std::vector<long long>> rows;
  rows.push_back(std::move(first));
  rows.push_back(std::move(second));
  return Scheme(std::move(rows));
}

std::vector<long long> Scheme::column(int mint) const {
  std::vector<long long> col(rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j) col[j] = rows_[j][mint];
  return col;
}

std::string cost_kind_name(CostKind kind) {
  switch (kind) {
    case CostKind::TotalMax: return "total-max";
    case CostKind::GrandSum: return "grand-sum";
    case CostKind::MaxEntry: return "max-entry";
  }
  return "total-max";
}

std::optional<CostKind> cost_kind_from_name(const std::string& name) {
  if (name == "total-max") return CostKind::TotalMax;
  if (name == "grand-sum") return CostKind::GrandSum;
  if (name == "max-entry") return CostKind::MaxEntry;
  return std::nullopt;
}

long long cost(const Scheme& scheme, CostKind kind) {
  long long total = 0;
  switch (kind) {
    case CostKind::TotalMax:
      for (int r = 0; r < scheme.mints(); ++r) {
        long long mx = 0;
        for (int j = 0; j < scheme.weighings(); ++j) mx = std::max(mx, scheme.entry(j, r));
        total += mx;
      }
      return total;
    case CostKind::GrandSum:
      for (const auto& row : scheme.rows())
        for (long long e : row) total += e;
      return total;
    case CostKind::MaxEntry:
      for (const auto& row : scheme.rows())
        for (long long e : row) total = std::max(total, e);
      return total;
  }
  return total;
}

Scheme factorial_scheme(int n) {
  if (n < 1) throw ConfigError("factorial scheme needs at least one mint");
  if (n > kFactorialSchemeMaxMints)
    throw OverflowError("factorial scheme entries exceed the supported coin count beyond n = " +
                        std::to_string(kFactorialSchemeMaxMints));
  std::vector<long long> first(n), second(n, 1);
  long long f = 1;
  for (int r = 1; r <= n; ++r) {
    f *= r;
    first[r - 1] = f;
  }
  return Scheme::classic(std::move(first), std::move(second));
}

BoundsResult bounds(int n, std::optional<CapacityWitness> witness) {
  if (n < 1) throw ConfigError("bounds need at least one mint");
  if (n > kMaxMints) throw ConfigError("bounds support up to " + std::to_string(kMaxMints) + " mints");
  long long factorial_total = 0;
  long long f = 1;
  for (int r = 1; r <= n; ++r) {
    f *= r;  // 20! fits in 64 bits
    factorial_total += f;
  }
  long long upper = factorial_total;
  if (witness) {
    if (witness->cap < 1) throw ConfigError("capacity witness cap must be positive");
    if (witness->mints >= n) upper = std::min(upper, witness->cap * n);
  }
  return BoundsResult{n, upper};
}

}  // namespace mints
