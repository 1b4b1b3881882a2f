#include "mints/search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>

#include "mints/json_io.hpp"
#include "search_engine.hpp"

namespace mints::search {

namespace {

using detail::Col;
using detail::CollinearKeyPolicy;
using detail::Engine;
using detail::EngineParams;
using detail::EngineResult;
using detail::EngineSnapshot;
using detail::Objective;

std::vector<Col> scheme_to_cols(const Scheme& scheme) {
  std::vector<Col> cols(scheme.mints());
  for (int r = 0; r < scheme.mints(); ++r) {
    Col& c = cols[r];
    for (int j = 0; j < scheme.weighings(); ++j) {
      c.e[j] = static_cast<std::int32_t>(scheme.entry(j, r));
      c.mx = std::max(c.mx, c.e[j]);
    }
  }
  return cols;
}

Scheme cols_to_scheme(const std::vector<Col>& cols, int k) {
  std::vector<std::vector<long long>> rows(k, std::vector<long long>(cols.size()));
  for (std::size_t r = 0; r < cols.size(); ++r)
    for (int j = 0; j < k; ++j) rows[j][r] = cols[r].e[j];
  return Scheme(std::move(rows));
}

SearchStats to_stats(const EngineResult& res) {
  SearchStats s;
  s.nodes = res.stats.nodes;
  s.elapsed = res.elapsed;
  s.pruned_bound = res.stats.pruned_bound;
  s.pruned_conflict = res.stats.pruned_conflict;
  s.pruned_symmetry = res.stats.pruned_symmetry;
  return s;
}

void validate(const SearchConfig& config) {
  if (config.mints < 1 || config.mints > detail::kMaxSearchMints)
    throw ConfigError("search supports 1.." + std::to_string(detail::kMaxSearchMints) + " mints");
  if (config.cap && *config.cap < 1) throw ConfigError("cap must be a positive integer");
  if (config.cap && *config.cap > kEntryMax)
    throw ConfigError("cap exceeds the largest supported coin count");
  if (config.threads < 1) throw ConfigError("thread count must be positive");
  if (config.budget.node_limit && *config.budget.node_limit < 1)
    throw ConfigError("node limit must be positive");
  if (config.budget.time_limit && config.budget.time_limit->count() < 1)
    throw ConfigError("time limit must be positive");
  if (config.initial_upper_bound && *config.initial_upper_bound < 1)
    throw ConfigError("initial upper bound must be positive");
}

long long factorial_total(int n, CostKind kind) {
  long long total = 0;
  long long f = 1;
  for (int r = 1; r <= n; ++r) {
    f *= r;
    total += f;
  }
  return kind == CostKind::GrandSum ? total + n : total;
}

struct Seed {
  long long cost = std::numeric_limits<long long>::max();
  std::vector<Col> cols;       // empty means bound-only
  bool user_truncated = false; // initial_upper_bound cut below any known scheme
  bool entry_truncated = false;  // kEntryMax cut the implied entry range
};

Seed make_seed(const SearchConfig& config) {
  Seed seed;
  const int n = config.mints;
  if (config.cap) {
    const long long per_col = config.cost_kind == CostKind::GrandSum ? 2 * *config.cap : *config.cap;
    seed.cost = per_col * n + 1;
  } else if (n <= kFactorialSchemeMaxMints) {
    const Scheme fact = canonicalize(factorial_scheme(n));
    seed.cost = cost(fact, config.cost_kind);
    seed.cols = scheme_to_cols(fact);
  } else {
    seed.cost = factorial_total(n, config.cost_kind) + 1;
  }
  if (config.initial_upper_bound && *config.initial_upper_bound + 1 < seed.cost) {
    seed.cost = *config.initial_upper_bound + 1;
    seed.cols.clear();
    seed.user_truncated = true;
  }
  if (!config.cap && seed.cost - (n - 1) > kEntryMax) seed.entry_truncated = true;
  return seed;
}

EngineParams make_engine_params(const SearchConfig& config, const Seed& seed) {
  EngineParams p;
  p.n = config.mints;
  p.k = 2;
  p.objective = config.cost_kind == CostKind::GrandSum ? Objective::EntrySum : Objective::ColumnMax;
  p.entry_cap = static_cast<std::int32_t>(std::min<long long>(config.cap.value_or(kEntryMax), kEntryMax));
  p.row_swap_break = true;
  p.seed_cost = seed.cost;
  p.seed_cols = seed.cols;
  p.threads = config.threads;
  p.node_limit = config.budget.node_limit;
  p.time_limit = config.budget.time_limit;
  return p;
}

SearchResult result_from_engine(const SearchConfig& config, const Seed& seed,
                                const EngineResult& res) {
  SearchResult out;
  out.stats = to_stats(res);
  const bool have_scheme = !res.best_cols.empty();
  if (have_scheme) {
    out.best_cost = res.best_cost;
    out.best_scheme = cols_to_scheme(res.best_cols, 2);
  }
  if (!res.complete) {
    out.status = SearchStatus::BestSoFar;
  } else if (have_scheme) {
    out.status = SearchStatus::Optimal;
  } else if (seed.user_truncated || seed.entry_truncated) {
    out.status = SearchStatus::BestSoFar;
  } else if (config.cap) {
    out.status = SearchStatus::Infeasible;
  } else {
    out.status = SearchStatus::BestSoFar;
  }
  return out;
}

void write_checkpoint_file(const std::string& path, const std::string& payload) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ConfigError("cannot write checkpoint file: " + path);
    out << payload;
  }
  std::filesystem::rename(tmp, target);
}

Checkpoint snapshot_to_checkpoint(const SearchConfig& config, const EngineSnapshot& snap) {
  Checkpoint cp;
  cp.config = config;
  cp.config.budget = Budget{};
  cp.config.threads = 1;
  if (!snap.best_cols.empty()) {
    cp.best_cost = snap.best_cost;
    cp.best_scheme = cols_to_scheme(snap.best_cols, 2);
  }
  cp.remaining.reserve(snap.remaining.size());
  for (const Col& c : snap.remaining) cp.remaining.emplace_back(c.e[0], c.e[1]);
  cp.nodes = snap.nodes;
  return cp;
}

// Existence of any feasible scheme at this size under the entry cap;
// single-threaded, first (lexicographically least) witness.
EngineResult exists_feasible(int n, long long cap, const Budget& budget) {
  EngineParams p;
  p.n = n;
  p.k = 2;
  p.objective = Objective::ColumnMax;
  p.entry_cap = static_cast<std::int32_t>(std::min<long long>(cap, kEntryMax));
  p.row_swap_break = true;
  p.find_first = true;
  p.threads = 1;
  p.node_limit = budget.node_limit;
  p.time_limit = budget.time_limit;
  return Engine<CollinearKeyPolicy>(p).run();
}

Budget budget_minus(const Budget& budget, const SearchStats& used) {
  Budget rest = budget;
  if (rest.node_limit)
    *rest.node_limit -= std::min<std::uint64_t>(*rest.node_limit, used.nodes);
  if (rest.time_limit) {
    *rest.time_limit -= std::min(*rest.time_limit,
                                 std::chrono::duration_cast<std::chrono::milliseconds>(used.elapsed));
    if (rest.time_limit->count() <= 0) *rest.time_limit = std::chrono::milliseconds(1);
  }
  return rest;
}

void accumulate(SearchStats& total, const EngineResult& res) {
  total.nodes += res.stats.nodes;
  total.elapsed += res.elapsed;
  total.pruned_bound += res.stats.pruned_bound;
  total.pruned_conflict += res.stats.pruned_conflict;
  total.pruned_symmetry += res.stats.pruned_symmetry;
}

bool budget_spent(const Budget& budget, const SearchStats& used) {
  if (budget.node_limit && used.nodes >= *budget.node_limit) return true;
  if (budget.time_limit && used.elapsed >= *budget.time_limit) return true;
  return false;
}

// Minimal max-entry: scan caps upward with existence tests; exhausting cap
// c - 1 proves cost c optimal once a witness appears.
SearchResult search_max_entry(const SearchConfig& config) {
  SearchResult out;
  const long long scan_limit =
      std::min<long long>({config.cap.value_or(kEntryMax),
                           config.initial_upper_bound.value_or(kEntryMax), kEntryMax});
  for (long long c = 1; c <= scan_limit; ++c) {
    const Budget rest = budget_minus(config.budget, out.stats);
    const EngineResult res = exists_feasible(config.mints, c, rest);
    accumulate(out.stats, res);
    if (!res.complete) {
      out.status = SearchStatus::BestSoFar;
      return out;
    }
    if (!res.best_cols.empty()) {
      out.status = SearchStatus::Optimal;
      out.best_cost = c;
      out.best_scheme = cols_to_scheme(res.best_cols, 2);
      return out;
    }
    if (budget_spent(config.budget, out.stats)) {
      out.status = SearchStatus::BestSoFar;
      return out;
    }
  }
  // Nothing feasible at any allowed cap. A cap proves infeasibility; a
  // user bound merely truncates the scan.
  out.status = (config.cap && scan_limit == *config.cap) ? SearchStatus::Infeasible
                                                         : SearchStatus::BestSoFar;
  return out;
}

}  // namespace

std::string search_status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::Optimal: return "optimal";
    case SearchStatus::BestSoFar: return "best-so-far";
    case SearchStatus::Infeasible: return "infeasible";
  }
  return "best-so-far";
}

SearchResult search_optimal(const SearchConfig& config) {
  return search_optimal(config, std::nullopt, std::nullopt);
}

SearchResult search_optimal(const SearchConfig& config,
                            const std::optional<CheckpointOptions>& checkpointing,
                            const std::optional<Checkpoint>& resume) {
  validate(config);
  if (config.cost_kind == CostKind::MaxEntry) {
    if (checkpointing || resume)
      throw ConfigError("checkpointing supports total-max and grand-sum searches");
    return search_max_entry(config);
  }

  Seed seed = make_seed(config);
  EngineParams params = make_engine_params(config, seed);

  if (resume) {
    const auto& rc = resume->config;
    if (rc.mints != config.mints || rc.cost_kind != config.cost_kind || rc.cap != config.cap)
      throw ConfigError("resume checkpoint was produced by a different search configuration");
    if (resume->best_scheme) {
      seed.cols = scheme_to_cols(*resume->best_scheme);
      seed.cost = *resume->best_cost;
      params.seed_cols = seed.cols;
      params.seed_cost = seed.cost;
    }
    std::vector<Col> branches;
    branches.reserve(resume->remaining.size());
    for (const auto& [p, q] : resume->remaining) {
      Col c;
      c.e[0] = static_cast<std::int32_t>(p);
      c.e[1] = static_cast<std::int32_t>(q);
      c.mx = static_cast<std::int32_t>(std::max(p, q));
      branches.push_back(c);
    }
    params.branches = std::move(branches);
  }

  Engine<CollinearKeyPolicy> engine(params);
  EngineResult res;
  if (checkpointing) {
    const auto interval =
        std::chrono::duration_cast<std::chrono::milliseconds>(checkpointing->interval);
    const auto write = [&](const EngineSnapshot& snap) {
      write_checkpoint_file(checkpointing->path,
                            json_io::checkpoint_to_json(snapshot_to_checkpoint(config, snap)));
    };
    res = engine.run(write, interval);
    // Final state, so a completed run leaves an empty frontier behind.
    EngineSnapshot final_snap;
    final_snap.best_cost = res.best_cost;
    final_snap.best_cols = res.best_cols;
    final_snap.remaining = res.remaining;
    final_snap.nodes = res.stats.nodes;
    write(final_snap);
  } else {
    res = engine.run();
  }

  SearchResult out = result_from_engine(config, seed, res);
  if (resume) out.stats.nodes += resume->nodes;
  return out;
}

CapacityResult capacity_max_mints(long long cap, const Budget& budget) {
  if (cap < 1) throw ConfigError("cap must be a positive integer");
  if (cap > kEntryMax) throw ConfigError("cap exceeds the largest supported coin count");

  CapacityResult out;
  for (int n = 1; n <= detail::kMaxSearchMints; ++n) {
    const Budget rest = budget_minus(budget, out.stats);
    const EngineResult res = exists_feasible(n, cap, rest);
    accumulate(out.stats, res);
    if (!res.complete) return out;  // budget ran out, result unproven
    if (res.best_cols.empty()) {
      out.proven = true;  // exhausted at n with no witness
      return out;
    }
    out.max_mints = n;
    out.witness = cols_to_scheme(res.best_cols, 2);
    if (budget_spent(budget, out.stats)) return out;
  }
  return out;  // hit the engine size limit without disproof; unproven
}

PartialState::PartialState() { sums_.emplace_back(0, 0); }

long long PartialState::cost(CostKind kind) const {
  long long total = 0;
  for (const MintVector& v : vectors_) {
    switch (kind) {
      case CostKind::TotalMax: total += std::max(v.p, v.q); break;
      case CostKind::GrandSum: total += v.p + v.q; break;
      case CostKind::MaxEntry: total = std::max({total, v.p, v.q}); break;
    }
  }
  return total;
}

std::optional<PartialState> extend(const PartialState& state, MintVector v) {
  if (v.p < 0 || v.q < 0) throw ConfigError("mint vector entries must be non-negative");
  if (v.p == 0 && v.q == 0) throw ConfigError("mint vector must be nonzero");
  if (v.p > kEntryMax || v.q > kEntryMax)
    throw ConfigError("mint vector entries exceed " + std::to_string(kEntryMax));
  if (state.size() >= kMaxMints)
    throw ConfigError("state already holds " + std::to_string(kMaxMints) + " vectors");

  PartialState next = state;
  next.vectors_.push_back(v);
  const std::size_t base = state.sums_.size();
  next.sums_.reserve(base * 2);
  for (std::size_t i = 0; i < base; ++i) {
    const long long a = state.sums_[i].first + v.p;
    const long long b = state.sums_[i].second + v.q;
    const std::int32_t ns[2] = {static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)};
    if (!next.directions_.insert(detail::CollinearKeyPolicy::key(ns, 2)).second)
      return std::nullopt;
    next.sums_.emplace_back(a, b);
  }
  return next;
}

Scheme canonicalize(const Scheme& scheme) {
  if (scheme.weighings() != 2)
    throw ConfigError("canonical form is defined for two-weighing schemes");
  std::vector<Col> cols = scheme_to_cols(scheme);
  const auto order = [](const Col& a, const Col& b) { return col_cmp(a, b, 2) < 0; };
  std::sort(cols.begin(), cols.end(), order);
  std::vector<Col> swapped(cols.size());
  std::transform(cols.begin(), cols.end(), swapped.begin(), detail::swapped_col);
  std::sort(swapped.begin(), swapped.end(), order);
  if (std::lexicographical_compare(cols.begin(), cols.end(), swapped.begin(), swapped.end(),
                                   order))
    cols = std::move(swapped);
  return cols_to_scheme(cols, 2);
}

bool is_canonical(const Scheme& scheme) { return scheme == canonicalize(scheme); }

}  // namespace mints::search
