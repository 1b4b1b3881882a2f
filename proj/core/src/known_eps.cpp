#include "mints/known_eps.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "search_engine.hpp"

namespace mints::known_eps {

namespace {

using detail::Col;
using detail::Engine;
using detail::EngineParams;
using detail::EngineResult;
using detail::EqualityKeyPolicy;
using detail::Objective;

Scheme cols_to_scheme(const std::vector<Col>& cols, int k) {
  std::vector<std::vector<long long>> rows(k, std::vector<long long>(cols.size()));
  for (std::size_t r = 0; r < cols.size(); ++r)
    for (int j = 0; j < k; ++j) rows[j][r] = cols[r].e[j];
  return Scheme(std::move(rows));
}

// Powers of two in the first weighing: all subset sums distinct by binary
// representation, cost 2^n - 1.
std::vector<Col> binary_seed_cols(int n, int k) {
  std::vector<Col> cols(n);
  for (int r = 0; r < n; ++r) {
    cols[r].e[0] = std::int32_t{1} << r;
    cols[r].mx = cols[r].e[0];
    (void)k;
  }
  return cols;
}

}  // namespace

FeasibilityReport verify_injective(const Scheme& scheme) {
  const int n = scheme.mints();
  const int k = scheme.weighings();
  const SubsetMask full = SubsetMask{1} << n;

  std::vector<std::vector<long long>> sums(full, std::vector<long long>(k, 0));
  for (SubsetMask m = 1; m < full; ++m) {
    const int low = std::countr_zero(m);
    const auto& base = sums[m & (m - 1)];
    auto& v = sums[m];
    for (int j = 0; j < k; ++j) v[j] = base[j] + scheme.entry(j, low);
  }

  std::map<std::vector<long long>, std::pair<SubsetMask, bool>> classes;
  std::optional<std::pair<SubsetMask, SubsetMask>> witness;
  for (SubsetMask m = 0; m < full; ++m) {
    auto [it, inserted] = classes.try_emplace(sums[m], std::make_pair(m, false));
    if (!inserted && !it->second.second) {
      it->second.second = true;
      std::pair<SubsetMask, SubsetMask> cand{it->second.first, m};
      if (!witness || cand < *witness) witness = cand;
    }
  }
  if (witness) return FeasibilityReport{false, witness};
  return FeasibilityReport{true, std::nullopt};
}

search::SearchResult search_known_eps(int n, int k, const search::Budget& budget, int threads) {
  if (n < 1 || n > detail::kMaxSearchMints)
    throw ConfigError("search supports 1.." + std::to_string(detail::kMaxSearchMints) + " mints");
  if (k < 1 || k > detail::kMaxSearchRows)
    throw ConfigError("known-eps search supports 1.." + std::to_string(detail::kMaxSearchRows) +
                      " weighings");
  if (threads < 1) throw ConfigError("thread count must be positive");
  if (budget.node_limit && *budget.node_limit < 1) throw ConfigError("node limit must be positive");
  if (budget.time_limit && budget.time_limit->count() < 1)
    throw ConfigError("time limit must be positive");

  EngineParams p;
  p.n = n;
  p.k = k;
  p.objective = Objective::ColumnMax;
  p.entry_cap = static_cast<std::int32_t>(std::min<long long>(kEntryMax, (1LL << n) - 1));
  p.row_swap_break = (k == 2);
  p.seed_cols = binary_seed_cols(n, k);
  p.seed_cost = (1LL << n) - 1;
  p.threads = threads;
  p.node_limit = budget.node_limit;
  p.time_limit = budget.time_limit;

  const EngineResult res = Engine<EqualityKeyPolicy>(p).run();

  search::SearchResult out;
  out.stats.nodes = res.stats.nodes;
  out.stats.elapsed = res.elapsed;
  out.stats.pruned_bound = res.stats.pruned_bound;
  out.stats.pruned_conflict = res.stats.pruned_conflict;
  out.stats.pruned_symmetry = res.stats.pruned_symmetry;
  out.best_cost = res.best_cost;
  out.best_scheme = cols_to_scheme(res.best_cols, k);
  out.status = res.complete ? search::SearchStatus::Optimal : search::SearchStatus::BestSoFar;
  return out;
}

std::optional<oracle::MinCostResult> exhaustive_min_cost_injective(int n, int k,
                                                                   long long cost_ceiling) {
  if (n < 1) throw ConfigError("exhaustive enumeration needs at least one mint");
  if (k < 1 || k > kMaxWeighings) throw ConfigError("bad weighing count");
  if (cost_ceiling < 1) return std::nullopt;

  // Candidate columns in lexicographic order, entries bounded by the
  // ceiling since each column contributes its maximum to the cost.
  const long long limit = std::min<long long>(cost_ceiling, kEntryMax);
  std::vector<std::vector<long long>> candidates;
  std::vector<long long> cur(k, 0);
  const auto gen = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      if (std::any_of(cur.begin(), cur.end(), [](long long v) { return v != 0; }))
        candidates.push_back(cur);
      return;
    }
    for (long long v = 0; v <= limit; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  gen(gen, 0);

  std::vector<std::vector<long long>> chosen;
  std::optional<oracle::MinCostResult> best;

  const auto col_max = [](const std::vector<long long>& c) {
    return *std::max_element(c.begin(), c.end());
  };
  const auto injective_prefix = [&](int t) {
    const SubsetMask full = SubsetMask{1} << t;
    std::vector<std::vector<long long>> sums(full, std::vector<long long>(k, 0));
    for (SubsetMask m = 1; m < full; ++m)
      for (int r = 0; r < t; ++r)
        if (m & (SubsetMask{1} << r))
          for (int j = 0; j < k; ++j) sums[m][j] += chosen[r][j];
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
  };
  const auto to_scheme = [&]() {
    std::vector<std::vector<long long>> rows(k, std::vector<long long>(n));
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < k; ++j) rows[j][r] = chosen[r][j];
    return Scheme(std::move(rows));
  };

  const auto run = [&](auto&& self, std::size_t from, int t, long long acc) -> void {
    if (t == n) {
      if (!best || acc < best->cost) best = oracle::MinCostResult{acc, to_scheme()};
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const long long next = acc + col_max(candidates[i]);
      if (next + (n - t - 1) > cost_ceiling) continue;
      chosen.push_back(candidates[i]);
      if (injective_prefix(t + 1)) self(self, i, t + 1, next);
      chosen.pop_back();
    }
  };
  run(run, 0, 0, 0);
  return best;
}

}  // namespace mints::known_eps
