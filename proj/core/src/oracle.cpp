#include "mints/oracle.hpp"

#include <algorithm>
#include <vector>

#include "mints/int128.hpp"

namespace mints::oracle {

namespace {

struct Column {
  long long p = 0;
  long long q = 0;
};

long long column_cost(const Column& c, CostKind kind) {
  switch (kind) {
    case CostKind::TotalMax: return std::max(c.p, c.q);
    case CostKind::GrandSum: return c.p + c.q;
    case CostKind::MaxEntry: return std::max(c.p, c.q);
  }
  return 0;
}

long long combine_cost(long long acc, long long col, CostKind kind) {
  return kind == CostKind::MaxEntry ? std::max(acc, col) : acc + col;
}

// Collinearity of the two subset sums, straight from the 2x2 determinant.
bool prefix_feasible(const std::vector<Column>& cols, int t) {
  const SubsetMask full = SubsetMask{1} << t;
  std::vector<Int128> a(full, 0), b(full, 0);
  for (SubsetMask m = 1; m < full; ++m) {
    for (int r = 0; r < t; ++r) {
      if (m & (SubsetMask{1} << r)) {
        a[m] += cols[r].p;
        b[m] += cols[r].q;
      }
    }
  }
  for (SubsetMask m1 = 1; m1 < full; ++m1)
    for (SubsetMask m2 = m1 + 1; m2 < full; ++m2)
      if (checked_mul(a[m1], b[m2]) == checked_mul(a[m2], b[m1])) return false;
  return true;
}

Scheme to_scheme(const std::vector<Column>& cols, int n) {
  std::vector<long long> first(n), second(n);
  for (int r = 0; r < n; ++r) {
    first[r] = cols[r].p;
    second[r] = cols[r].q;
  }
  return Scheme::classic(std::move(first), std::move(second));
}

struct Enumerator {
  int n;
  CostKind kind;
  long long ceiling;
  std::vector<Column> candidates;
  std::vector<Column> chosen;
  std::optional<MinCostResult> best;

  // chosen[0..t) has already passed prefix_feasible on entry.
  void run(std::size_t from, int t, long long acc) {
    if (t == n) {
      if (!best || acc < best->cost) best = MinCostResult{acc, to_scheme(chosen, n)};
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Column& c = candidates[i];
      const long long next = combine_cost(acc, column_cost(c, kind), kind);
      if (next > ceiling) continue;
      if (kind != CostKind::MaxEntry && next + (n - t - 1) > ceiling) continue;
      chosen.push_back(c);
      if (prefix_feasible(chosen, t + 1)) run(i, t + 1, next);
      chosen.pop_back();
    }
  }
};

}  // namespace

FeasibilityReport naive_verify(const Scheme& scheme) {
  if (scheme.weighings() != 2) throw ConfigError("naive_verify handles exactly two weighings");
  const int n = scheme.mints();
  const SubsetMask full = SubsetMask{1} << n;
  std::vector<Int128> a(full, 0), b(full, 0);
  for (SubsetMask m = 1; m < full; ++m) {
    for (int r = 0; r < n; ++r) {
      if (m & (SubsetMask{1} << r)) {
        a[m] = checked_add(a[m], scheme.entry(0, r));
        b[m] = checked_add(b[m], scheme.entry(1, r));
      }
    }
  }
  for (SubsetMask m1 = 1; m1 < full; ++m1) {
    for (SubsetMask m2 = m1 + 1; m2 < full; ++m2) {
      if (checked_mul(a[m1], b[m2]) == checked_mul(a[m2], b[m1]))
        return FeasibilityReport{false, std::make_pair(m1, m2)};
    }
  }
  return FeasibilityReport{true, std::nullopt};
}

std::optional<MinCostResult> exhaustive_min_cost(int n, CostKind kind, long long cost_ceiling) {
  if (n < 1) throw ConfigError("exhaustive_min_cost needs at least one mint");
  if (cost_ceiling < 1) return std::nullopt;

  // Candidate columns small enough to appear in any scheme under the
  // ceiling, in (p, q) order.
  const long long entry_limit = std::min<long long>(cost_ceiling, kEntryMax);
  Enumerator e{n, kind, cost_ceiling, {}, {}, std::nullopt};
  for (long long p = 0; p <= entry_limit; ++p)
    for (long long q = 0; q <= entry_limit; ++q) {
      if (p == 0 && q == 0) continue;
      if (column_cost({p, q}, kind) > cost_ceiling) continue;
      e.candidates.push_back({p, q});
    }

  e.run(0, 0, 0);
  return e.best;
}

}  // namespace mints::oracle
