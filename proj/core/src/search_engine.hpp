#include <cstdio>
#ifndef MINTS_SEARCH_ENGINE_HPP
#define MINTS_SEARCH_ENGINE_HPP

// Internal branch-and-bound engine shared by the classic search (pairwise
// non-collinear subset sums) and the known-eps search (pairwise distinct
// subset sums). Not installed; include only from library sources.
//
// Mints are assigned column vectors in non-decreasing order under the key
// (max entry, entries lexicographically), which breaks mint-permutation
// symmetry. For two weighings, weighing-swap symmetry is broken groupwise:
// swapping rows permutes columns within each run of equal column maxima, so
// a prefix whose first completed run orders below its swapped image cannot
// be canonical and is cut.
//
// The incumbent is a (cost, column sequence) pair ordered lexicographically.
// A node whose bound ties the incumbent cost is pruned only if its column
// prefix already orders after the incumbent scheme. That keeps the reported
// optimum independent of worker count and scheduling.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "mints/errors.hpp"
#include "mints/scheme.hpp"

namespace mints::detail {

inline constexpr int kMaxSearchMints = 16;
inline constexpr int kMaxSearchRows = 4;
inline constexpr std::size_t kGroupGenLimit = std::size_t{1} << 22;

struct Col {
  std::array<std::int32_t, kMaxSearchRows> e{};
  std::int32_t mx = 0;
};

inline int col_cmp(const Col& a, const Col& b, int k) {
  if (a.mx != b.mx) return a.mx < b.mx ? -1 : 1;
  for (int j = 0; j < k; ++j)
    if (a.e[j] != b.e[j]) return a.e[j] < b.e[j] ? -1 : 1;
  return 0;
}

inline Col swapped_col(const Col& c) {
  Col s = c;
  std::swap(s.e[0], s.e[1]);
  return s;
}

// Columns with maximum entry exactly m, in key order.
inline void fill_group(int k, std::int32_t m, std::vector<Col>& out) {
  out.clear();
  Col c;
  c.mx = m;
  if (k == 1) {
    c.e[0] = m;
    out.push_back(c);
    return;
  }
  if (k == 2) {
    for (std::int32_t p = 0; p < m; ++p) {
      c.e = {p, m, 0, 0};
      out.push_back(c);
    }
    for (std::int32_t q = 0; q <= m; ++q) {
      c.e = {m, q, 0, 0};
      out.push_back(c);
    }
    return;
  }
  // k in {3, 4}: lexicographic scan; only the last position is forced to m
  // when no earlier entry hit it.
  const auto rec = [&](auto&& self, int pos, bool seen_m) -> void {
    if (pos == k - 1) {
      for (std::int32_t v = seen_m ? 0 : m; v <= m; ++v) {
        c.e[pos] = v;
        if (out.size() >= kGroupGenLimit)
          throw ConfigError("search bound too large for this many weighings");
        out.push_back(c);
      }
      return;
    }
    for (std::int32_t v = 0; v <= m; ++v) {
      c.e[pos] = v;
      self(self, pos + 1, seen_m || v == m);
    }
  };
  rec(rec, 0, false);
}

// Conflict keys. A scheme prefix stays viable while the keys of all its
// non-empty subset sums are distinct.

// Classic problem: two subset sums conflict when collinear, so the key is
// the gcd-reduced direction packed into 64 bits. Coordinates are
// non-negative and far below 2^31 for any column set under kEntryMax.
struct CollinearKeyPolicy {
  static constexpr int kMinRows = 2;
  static constexpr int kMaxRows = 2;
  static std::uint64_t key(const std::int32_t* s, int /*k*/) {
    std::uint32_t a = static_cast<std::uint32_t>(s[0]);
    std::uint32_t b = static_cast<std::uint32_t>(s[1]);
    const std::uint32_t g = std::gcd(a, b);
    a /= g;
    b /= g;
    return (std::uint64_t{a} << 32) | b;
  }
};

// Known-eps problem: sums conflict when equal, so the key is the raw sum
// packed at a per-row width. A sum outside the width is an error rather
// than a silent mis-key.
struct EqualityKeyPolicy {
  static constexpr int kMinRows = 1;
  static constexpr int kMaxRows = 4;
  static std::uint64_t key(const std::int32_t* s, int k) {
    static constexpr int kBits[5] = {0, 63, 31, 21, 15};
    const int bits = kBits[k];
    std::uint64_t out = 0;
    for (int j = 0; j < k; ++j) {
      const auto v = static_cast<std::uint64_t>(s[j]);
      if (v >= (std::uint64_t{1} << bits))
        throw OverflowError("subset sums exceed the packed range for this many weighings");
      out = (out << bits) | v;
    }
    return out;
  }
};

// Open-addressing set of nonzero 64-bit keys with journaled undo: clearing
// the most recently inserted slots restores the exact prior table, since
// linear-probe insertion never relocates existing entries.
class KeySet {
 public:
  void init(int n_bits) {
    slots_.assign(std::size_t{1} << (n_bits + 2), 0);
    mask_ = slots_.size() - 1;
  }

  bool insert(std::uint64_t key, std::vector<std::uint32_t>& journal) {
    std::size_t i = mix(key) & mask_;
    while (slots_[i] != 0) {
      if (slots_[i] == key) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = key;
    journal.push_back(static_cast<std::uint32_t>(i));
    return true;
  }

  void rollback(std::vector<std::uint32_t>& journal, std::size_t mark) {
    for (std::size_t i = journal.size(); i > mark; --i) slots_[journal[i - 1]] = 0;
    journal.resize(mark);
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::vector<std::uint64_t> slots_;
  std::size_t mask_ = 0;
};

enum class Objective { ColumnMax, EntrySum };

struct EngineStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned_bound = 0;
  std::uint64_t pruned_conflict = 0;
  std::uint64_t pruned_symmetry = 0;
};

struct EngineParams {
  int n = 1;
  int k = 2;
  Objective objective = Objective::ColumnMax;
  std::int32_t entry_cap = 1;  // per-entry ceiling, already clamped to kEntryMax
  bool row_swap_break = false;
  bool find_first = false;  // stop at the lexicographically least feasible scheme
  long long seed_cost = std::numeric_limits<long long>::max();
  std::vector<Col> seed_cols;  // empty means bound-only seed
  int threads = 1;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::vector<Col>> branches;  // resume: explicit first-level branches
};

struct EngineSnapshot {
  long long best_cost = 0;
  std::vector<Col> best_cols;
  std::vector<Col> remaining;
  std::uint64_t nodes = 0;
};

struct EngineResult {
  bool complete = false;  // search space exhausted (budget not hit)
  long long best_cost = 0;
  std::vector<Col> best_cols;
  EngineStats stats;
  std::vector<Col> remaining;  // unfinished first-level branches when incomplete
  std::chrono::milliseconds elapsed{0};
};

template <class Policy>
class Engine {
 public:
  explicit Engine(const EngineParams& params) : p_(params) {
    if (p_.k < Policy::kMinRows || p_.k > Policy::kMaxRows)
      throw ConfigError("unsupported number of weighings for this search");
    if (p_.n < 1 || p_.n > kMaxSearchMints)
      throw ConfigError("search supports 1.." + std::to_string(kMaxSearchMints) + " mints");
    if (p_.find_first && p_.threads != 1)
      throw ConfigError("existence search runs single-threaded");
    best_cost_ = p_.seed_cost;
    best_cols_ = p_.seed_cols;
    best_atomic_.store(best_cost_, std::memory_order_relaxed);
  }

  EngineResult run(const std::function<void(const EngineSnapshot&)>& checkpoint_cb = nullptr,
                   std::chrono::milliseconds checkpoint_interval = std::chrono::minutes(1)) {
    t0_ = std::chrono::steady_clock::now();
    make_branches();
    done_ = std::make_unique<std::atomic<bool>[]>(std::max<std::size_t>(1, branches_.size()));
    for (std::size_t i = 0; i < branches_.size(); ++i) done_[i].store(false);

    const int threads =
        std::max(1, std::min<int>(p_.threads, static_cast<int>(branches_.size())));
    if (threads == 1 && !checkpoint_cb) {
      Worker w(*this);
      w.run();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([this] {
          Worker w(*this);
          w.run();
        });
      if (checkpoint_cb) {
        auto next = t0_ + checkpoint_interval;
        while (workers_done_.load(std::memory_order_acquire) < static_cast<int>(pool.size())) {
          std::this_thread::sleep_for(std::chrono::milliseconds(50));
          if (std::chrono::steady_clock::now() >= next) {
            checkpoint_cb(snapshot());
            next += checkpoint_interval;
          }
        }
      }
      for (auto& th : pool) th.join();
    }

    if (error_) std::rethrow_exception(error_);

    EngineResult res;
    res.complete = !stop_.load(std::memory_order_acquire) || found_first_;
    res.best_cost = best_cost_;
    res.best_cols = best_cols_;
    res.stats = stats_;
    res.stats.nodes = nodes_.load(std::memory_order_relaxed);
    if (!res.complete) res.remaining = remaining_branches();
    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0_);
    return res;
  }

 private:
  class Worker;
  friend class Worker;

  void make_branches() {
    if (p_.branches) {
      branches_ = *p_.branches;
      return;
    }
    std::vector<Col> group;
    for (std::int32_t m = 1; m <= p_.entry_cap; ++m) {
      if (!p_.find_first && static_cast<long long>(m) * p_.n > best_cost_) break;
      fill_group(p_.k, m, group);
      branches_.insert(branches_.end(), group.begin(), group.end());
    }
  }

  bool over_node_limit() {
    if (!p_.node_limit) return false;
    if (nodes_.load(std::memory_order_relaxed) > *p_.node_limit) {
      stop_.store(true, std::memory_order_release);
      return true;
    }
    return false;
  }

  EngineSnapshot snapshot() {
    EngineSnapshot s;
    s.remaining = remaining_branches();
    std::lock_guard<std::mutex> lock(mu_);
    s.best_cost = best_cost_;
    s.best_cols = best_cols_;
    s.nodes = nodes_.load(std::memory_order_relaxed);
    return s;
  }

  std::vector<Col> remaining_branches() const {
    std::vector<Col> rem;
    for (std::size_t i = 0; i < branches_.size(); ++i)
      if (!done_[i].load(std::memory_order_acquire)) rem.push_back(branches_[i]);
    return rem;
  }

  const EngineParams p_;
  std::vector<Col> branches_;
  std::unique_ptr<std::atomic<bool>[]> done_;
  std::atomic<std::size_t> next_branch_{0};

  std::mutex mu_;  // guards best_cost_, best_cols_, best_version_, stats_, error_
  long long best_cost_ = 0;
  std::vector<Col> best_cols_;
  bool found_first_ = false;
  EngineStats stats_;

  std::atomic<long long> best_atomic_{0};
  std::atomic<std::uint64_t> best_version_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<int> workers_done_{0};
  std::exception_ptr error_;
  std::chrono::steady_clock::time_point t0_;
};

template <class Policy>
class Engine<Policy>::Worker {
 public:
  explicit Worker(Engine& eng) : e_(eng), p_(eng.p_) {
    sums_.reserve(std::size_t{4} << p_.n);
    set_.init(p_.n);
    journal_.reserve(std::size_t{2} << p_.n);
    path_.resize(p_.n);
    gstart_.resize(p_.n + 1, 0);
    swap_decided_.resize(p_.n + 1, 0);
    scratch_.resize(p_.n);
    scratch_m_.resize(p_.n, -1);
  }

  void run() {
    fprintf(stderr, "[worker] start, branches=%zu\n", e_.branches_.size());
    try {
      for (;;) {
        if (e_.stop_.load(std::memory_order_acquire)) break;
        const std::size_t i = e_.next_branch_.fetch_add(1, std::memory_order_relaxed);
        if (i >= e_.branches_.size()) break;
        if (i < 5 || i % 100 == 0) fprintf(stderr, "[worker] branch %zu nodes=%llu\n", i, (unsigned long long)local_nodes_);
        if (run_branch(e_.branches_[i])) e_.done_[i].store(true, std::memory_order_release);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(e_.mu_);
      if (!e_.error_) e_.error_ = std::current_exception();
      e_.stop_.store(true, std::memory_order_release);
    }
    flush_nodes();
    {
      std::lock_guard<std::mutex> lock(e_.mu_);
      e_.stats_.pruned_bound += stats_.pruned_bound;
      e_.stats_.pruned_conflict += stats_.pruned_conflict;
      e_.stats_.pruned_symmetry += stats_.pruned_symmetry;
      stats_ = EngineStats{};
    }
  }

 private:
  // Returns true when the branch subtree was fully explored.
  bool run_branch(const Col& c) {
    set_.rollback(journal_, 0);
    sums_.assign(4, 0);
    count_ = 1;

    const long long contrib = contribution(c);
    const long long bound = contrib + static_cast<long long>(c.mx) * (p_.n - 1);
    if (!p_.find_first) {
      const long long best = e_.best_atomic_.load(std::memory_order_relaxed);
      if (bound > best) {
        ++stats_.pruned_bound;
        return true;
      }
      if (bound == best && !lex_viable(0, c, bound)) {
        ++stats_.pruned_bound;
        return true;
      }
    }
    if (!count_node()) return false;
    if (!try_extend(c)) {
      ++stats_.pruned_conflict;
      return true;
    }
    path_[0] = c;
    gstart_[1] = 0;
    swap_decided_[1] = 0;
    const bool finished = dfs(1, contrib);
    set_.rollback(journal_, 0);
    return finished;
  }

  long long contribution(const Col& c) const {
    if (p_.objective == Objective::ColumnMax) return c.mx;
    long long s = 0;
    for (int j = 0; j < p_.k; ++j) s += c.e[j];
    return s;
  }

  // Lexicographic comparison of the closed run [gstart_[t], t) against its
  // swapped-and-sorted image; negative means the prefix is not canonical.
  int close_group_cmp(int t) {
    const int gs = gstart_[t];
    sigma_.clear();
    for (int i = gs; i < t; ++i) sigma_.push_back(swapped_col(path_[i]));
    std::sort(sigma_.begin(), sigma_.end(),
              [this](const Col& a, const Col& b) { return col_cmp(a, b, p_.k) < 0; });
    for (int i = gs; i < t; ++i) {
      const int c = col_cmp(path_[i], sigma_[i - gs], p_.k);
      if (c != 0) return c;
    }
    return 0;
  }

  void refresh_incumbent() {
    const std::uint64_t v = e_.best_version_.load(std::memory_order_acquire);
    if (v == cached_version_) return;
    std::lock_guard<std::mutex> lock(e_.mu_);
    cached_version_ = e_.best_version_.load(std::memory_order_relaxed);
    cached_cost_ = e_.best_cost_;
    cached_cols_ = e_.best_cols_;
  }

  // Decide whether a node whose bound ties the incumbent cost may still
  // lead to a lexicographically smaller optimum. Comparing against a stale
  // incumbent is sound: incumbents only ever improve, so a prefix ordering
  // after the stale columns orders after the current ones too.
  bool lex_viable(int t, const Col& c, long long bound) {
    refresh_incumbent();
    if (bound > cached_cost_) return false;
    if (bound < cached_cost_) return true;
    if (cached_cols_.empty()) return false;
    for (int i = 0; i < t; ++i) {
      const int cmp = col_cmp(path_[i], cached_cols_[i], p_.k);
      if (cmp != 0) return cmp < 0;
    }
    return col_cmp(c, cached_cols_[t], p_.k) <= 0;
  }

  bool count_node() {
    ++local_nodes_;
    if (p_.threads == 1 || (local_nodes_ & 63) == 0) {
      flush_nodes();
      if (e_.over_node_limit()) return false;
    }
    if ((local_nodes_ & 16383) == 0 && p_.time_limit &&
        std::chrono::steady_clock::now() - e_.t0_ >= *p_.time_limit) {
      e_.stop_.store(true, std::memory_order_release);
    }
    return !e_.stop_.load(std::memory_order_acquire);
  }

  void flush_nodes() {
    if (pending_nodes_ != local_nodes_) {
      e_.nodes_.fetch_add(local_nodes_ - pending_nodes_, std::memory_order_relaxed);
      pending_nodes_ = local_nodes_;
    }
  }

  bool try_extend(const Col& c) {
    const std::size_t mark = journal_.size();
    const std::size_t base = count_ * 4;
    for (std::size_t i = 0; i < count_; ++i) {
      std::int32_t ns[4] = {0, 0, 0, 0};
      const std::int32_t* s = &sums_[i * 4];
      for (int j = 0; j < p_.k; ++j) ns[j] = s[j] + c.e[j];
      if (!set_.insert(Policy::key(ns, p_.k), journal_)) {
        set_.rollback(journal_, mark);
        sums_.resize(base);
        return false;
      }
      sums_.insert(sums_.end(), ns, ns + 4);
    }
    count_ *= 2;
    return true;
  }

  void undo_extend(std::size_t journal_mark) {
    set_.rollback(journal_, journal_mark);
    count_ /= 2;
    sums_.resize(count_ * 4);
  }

  bool leaf(long long cost) {
    if (p_.row_swap_break && swap_decided_[p_.n] == 0 && close_group_cmp(p_.n) < 0) {
      ++stats_.pruned_symmetry;
      return true;
    }
    std::lock_guard<std::mutex> lock(e_.mu_);
    if (p_.find_first) {
      if (!e_.found_first_) {
        e_.found_first_ = true;
        e_.best_cost_ = cost;
        e_.best_cols_.assign(path_.begin(), path_.end());
        e_.stop_.store(true, std::memory_order_release);
      }
      return false;
    }
    bool better = cost < e_.best_cost_;
    if (!better && cost == e_.best_cost_ && !e_.best_cols_.empty()) {
      for (int i = 0; i < p_.n; ++i) {
        const int cmp = col_cmp(path_[i], e_.best_cols_[i], p_.k);
        if (cmp != 0) {
          better = cmp < 0;
          break;
        }
      }
    }
    if (better) {
      e_.best_cost_ = cost;
      e_.best_cols_.assign(path_.begin(), path_.end());
      e_.best_atomic_.store(cost, std::memory_order_relaxed);
      e_.best_version_.fetch_add(1, std::memory_order_release);
    }
    return true;
  }

  // path_[0..t) placed and conflict-free; returns false to stop the search.
  bool dfs(int t, long long cost_so_far) {
    if (t == p_.n) return leaf(cost_so_far);
    const Col& prev = path_[t - 1];
    int closed_cmp = 2;  // lazy cache of close_group_cmp(t)

    for (std::int32_t m = prev.mx;; ++m) {
      if (m > p_.entry_cap) break;
      if (!p_.find_first) {
        const long long best = e_.best_atomic_.load(std::memory_order_relaxed);
        if (cost_so_far + static_cast<long long>(m) * (p_.n - t) > best) {
          ++stats_.pruned_bound;
          break;
        }
      }
      const bool same_group = (m == prev.mx);
      std::int8_t decided = swap_decided_[t];
      if (p_.row_swap_break && !same_group && decided == 0) {
        if (closed_cmp == 2) closed_cmp = close_group_cmp(t);
        if (closed_cmp < 0) {
          ++stats_.pruned_symmetry;
          break;  // the closed run already orders below its swap image
        }
        decided = closed_cmp > 0 ? 1 : 0;
      }

      std::vector<Col>& cols = scratch_[t];
      if (scratch_m_[t] != m) {
        fill_group(p_.k, m, cols);
        scratch_m_[t] = m;
      }
      std::size_t start = 0;
      if (same_group) {
        start = std::upper_bound(cols.begin(), cols.end(), prev,
                                 [this](const Col& a, const Col& b) {
                                   return col_cmp(a, b, p_.k) < 0;
                                 }) -
                cols.begin();
      }

      for (std::size_t i = start; i < cols.size(); ++i) {
        const Col& c = cols[i];
        const long long contrib = contribution(c);
        const long long bound =
            cost_so_far + contrib + static_cast<long long>(m) * (p_.n - t - 1);
        if (!p_.find_first) {
          const long long best = e_.best_atomic_.load(std::memory_order_relaxed);
          if (bound > best) {
            ++stats_.pruned_bound;
            if (p_.objective == Objective::ColumnMax) break;
            continue;
          }
          if (bound == best && !lex_viable(t, c, bound)) {
            ++stats_.pruned_bound;
            continue;
          }
        }
        if (!count_node()) return false;
        const std::size_t mark = journal_.size();
        if (!try_extend(c)) {
          ++stats_.pruned_conflict;
          continue;
        }
        path_[t] = c;
        gstart_[t + 1] = same_group ? gstart_[t] : t;
        swap_decided_[t + 1] = same_group ? swap_decided_[t] : decided;
        const bool keep_going = dfs(t + 1, cost_so_far + contrib);
        undo_extend(mark);
        if (!keep_going) return false;
      }
    }
    return true;
  }

  Engine& e_;
  const EngineParams& p_;
  std::vector<std::int32_t> sums_;  // 4 lanes per subset, 2^t subsets
  std::size_t count_ = 0;
  KeySet set_;
  std::vector<std::uint32_t> journal_;
  std::vector<Col> path_;
  std::vector<int> gstart_;
  std::vector<std::int8_t> swap_decided_;
  std::vector<std::vector<Col>> scratch_;
  std::vector<std::int32_t> scratch_m_;
  std::vector<Col> sigma_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t pending_nodes_ = 0;
  long long cached_cost_ = std::numeric_limits<long long>::max();
  std::vector<Col> cached_cols_;
  std::uint64_t cached_version_ = std::numeric_limits<std::uint64_t>::max();
  EngineStats stats_;
};

}  // namespace mints::detail

#endif  // MINTS_SEARCH_ENGINE_HPP
