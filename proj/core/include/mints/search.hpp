#ifndef MINTS_SEARCH_HPP
#define MINTS_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mints/scheme.hpp"

namespace mints::search {

struct Budget {
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct SearchConfig {
  int mints = 1;
  CostKind cost_kind = CostKind::TotalMax;
  std::optional<long long> cap;  // per-mint ceiling on max(P_r, Q_r)
  Budget budget;
  std::optional<long long> initial_upper_bound;
  int threads = 1;
};

enum class SearchStatus {
  Optimal,    // best_cost is the proven minimum
  BestSoFar,  // budget ran out, or the requested bound excluded everything
  Infeasible, // the cap admits no feasible scheme, proved by exhaustion
};

std::string search_status_name(SearchStatus status);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
  std::uint64_t pruned_bound = 0;
  std::uint64_t pruned_conflict = 0;
  std::uint64_t pruned_symmetry = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::BestSoFar;
  std::optional<long long> best_cost;
  std::optional<Scheme> best_scheme;
  SearchStats stats;
};

// Exact minimum-cost search over two-weighing schemes. Deterministic for
// any worker count: ties on cost resolve to the lexicographically smallest
// canonical scheme.
SearchResult search_optimal(const SearchConfig& config);

// Checkpointing for long runs: the file holds the frontier of unexplored
// first-level branches plus the incumbent, so an interrupted search can be
// resumed without repeating finished work.
struct CheckpointOptions {
  std::string path;
  std::chrono::seconds interval{60};
};

struct Checkpoint {
  SearchConfig config;  // budget and threads are not persisted
  std::optional<long long> best_cost;
  std::optional<Scheme> best_scheme;
  std::vector<std::pair<long long, long long>> remaining;  // first-level columns (p, q)
  std::uint64_t nodes = 0;
};

SearchResult search_optimal(const SearchConfig& config,
                            const std::optional<CheckpointOptions>& checkpointing,
                            const std::optional<Checkpoint>& resume);

struct CapacityResult {
  int max_mints = 0;
  std::optional<Scheme> witness;
  bool proven = false;
  SearchStats stats;
};

// Largest number of mints testable when every count is at most cap.
// Proven results exhaust the search at max_mints + 1.
CapacityResult capacity_max_mints(long long cap, const Budget& budget = {});

// One mint's pair of weighing counts.
struct MintVector {
  long long p = 0;
  long long q = 0;
};

// Incrementally maintained feasibility state: all subset sums of the
// chosen vectors plus the set of their canonical directions. Extending by
// a vector fails exactly when some new subset sum becomes collinear with
// an existing or another new one.
class PartialState {
 public:
  PartialState();

  int size() const { return static_cast<int>(vectors_.size()); }
  const std::vector<MintVector>& vectors() const { return vectors_; }
  std::size_t direction_count() const { return directions_.size(); }
  long long cost(CostKind kind) const;

  friend std::optional<PartialState> extend(const PartialState& state, MintVector v);

 private:
  std::vector<MintVector> vectors_;
  std::vector<std::pair<long long, long long>> sums_;  // 2^size sums, empty subset first
  std::unordered_set<std::uint64_t> directions_;       // packed canonical directions
};

// Returns the extended state, or nullopt on a collinearity conflict.
std::optional<PartialState> extend(const PartialState& state, MintVector v);

// Canonical form of a two-weighing scheme under mint permutation and
// weighing swap: columns sorted by (max, p, q), and of the two row orders
// the one whose sorted column sequence is lexicographically larger.
Scheme canonicalize(const Scheme& scheme);
bool is_canonical(const Scheme& scheme);

}  // namespace mints::search

#endif  // MINTS_SEARCH_HPP
