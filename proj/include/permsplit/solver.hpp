#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "permsplit/collision_table.hpp"
#include "permsplit/split_plan.hpp"

namespace permsplit {

// A right action of S_n on a state set: apply(identity, s) == s and
// apply(compose(g, h), s) == apply(h, apply(g, s)). encode must be injective
// on the reachable states; equal encodings mean equal states.
template <typename A>
concept GroupAction = requires(const A& action, const typename A::State& s, const Permutation& g) {
  typename A::State;
  { action.degree() } -> std::convertible_to<int>;
  { action.apply(g, s) } -> std::same_as<typename A::State>;
  { action.encode(s) } -> std::convertible_to<std::string>;
};

class MemoryCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  std::uint64_t memory_cap_bytes = 0;  // 0 = uncapped
  int threads = 1;
};

struct SolveReport {
  std::optional<Permutation> witness;
  // With no witness: true means a proof that no solution exists (the plan
  // factorization covers all of S_n), false means probabilistic evidence
  // only (randomized plans).
  bool conclusive = false;
  std::uint64_t stored_count = 0;
  std::uint64_t scanned_count = 0;
  double wall_seconds = 0.0;
};

template <GroupAction A>
bool verify(const A& action, const typename A::State& r, const typename A::State& s,
            const Permutation& g) {
  return action.encode(action.apply(g, r)) == action.encode(s);
}

namespace detail {

struct ScanHit {
  std::size_t slice = 0;
  std::uint64_t offset = 0;
  Permutation scanned;
  Permutation stored;

  bool earlier_than(const ScanHit& other) const {
    return slice != other.slice ? slice < other.slice : offset < other.offset;
  }
};

// Builds the table over the given slices; deterministic regardless of the
// worker count because fragments merge in slice order.
template <typename KeyOf>
CollisionTable build_collision_table(std::vector<std::unique_ptr<PermStream>> slices,
                                     const KeyOf& key_of, int threads) {
  CollisionTable table;
  if (threads <= 1 || slices.size() <= 1) {
    Permutation element = Permutation::identity(1);
    for (const auto& slice : slices)
      while (slice->next(element)) table.insert(key_of(element), element);
    return table;
  }
  std::vector<CollisionTable> fragments(slices.size());
  std::atomic<std::size_t> next_slice{0};
  std::vector<std::thread> workers;
  const int worker_count = std::min<std::size_t>(static_cast<std::size_t>(threads), slices.size());
  for (int w = 0; w < worker_count; ++w) {
    workers.emplace_back([&] {
      Permutation element = Permutation::identity(1);
      for (;;) {
        const std::size_t i = next_slice.fetch_add(1);
        if (i >= slices.size()) return;
        while (slices[i]->next(element)) fragments[i].insert(key_of(element), element);
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& fragment : fragments) table.merge_from(std::move(fragment));
  return table;
}

// Scans the slices in canonical order for the earliest table hit. Parallel
// workers abandon slices that can no longer precede the best hit, so the
// returned hit is the canonical-order first match whatever the thread count.
template <typename KeyOf>
std::optional<ScanHit> scan_for_hit(std::vector<std::unique_ptr<PermStream>> slices,
                                    const CollisionTable& table, const KeyOf& key_of, int threads,
                                    std::uint64_t& scanned_total) {
  std::atomic<std::size_t> next_slice{0};
  std::atomic<std::size_t> best_slice{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> scanned{0};
  std::mutex best_mutex;
  std::optional<ScanHit> best;

  const auto worker = [&] {
    Permutation element = Permutation::identity(1);
    for (;;) {
      const std::size_t i = next_slice.fetch_add(1);
      if (i >= slices.size()) return;
      if (i > best_slice.load(std::memory_order_relaxed)) return;
      std::uint64_t offset = 0;
      std::uint64_t local_scanned = 0;
      while (slices[i]->next(element)) {
        ++local_scanned;
        if (const Permutation* stored = table.find(key_of(element))) {
          std::lock_guard<std::mutex> lock(best_mutex);
          ScanHit hit{i, offset, element, *stored};
          if (!best || hit.earlier_than(*best)) {
            best = std::move(hit);
            std::size_t prev = best_slice.load();
            while (i < prev && !best_slice.compare_exchange_weak(prev, i)) {
            }
          }
          break;  // later offsets in this slice cannot improve
        }
        ++offset;
        if ((offset & 0x3ff) == 0 && i > best_slice.load(std::memory_order_relaxed)) break;
      }
      scanned.fetch_add(local_scanned);
    }
  };

  const int worker_count =
      std::max(1, std::min<int>(threads, static_cast<int>(slices.size())));
  if (worker_count == 1) {
    worker();
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < worker_count; ++w) workers.emplace_back(worker);
    for (auto& w : workers) w.join();
  }
  scanned_total = scanned.load();
  return best;
}

template <GroupAction A>
SolveReport solve_with_side(const A& action, const typename A::State& r,
                            const typename A::State& s, const SplitPlan& plan, bool store_second,
                            const SolveOptions& options) {
  if (plan.degree() != action.degree())
    throw std::invalid_argument("solve: plan degree does not match the action degree");
  const auto started = std::chrono::steady_clock::now();
  const int threads = std::max(1, options.threads);

  const std::size_t key_bytes = action.encode(r).size();
  const std::uint64_t entry_bytes = CollisionTable::estimate_entry_bytes(key_bytes, plan.degree());
  if (options.memory_cap_bytes != 0) {
    const ExactCount stored_size = store_second ? plan.size_second() : plan.size_first();
    if (stored_size * entry_bytes > options.memory_cap_bytes)
      throw MemoryCapError("solve: stored side estimate exceeds the memory cap");
  }

  // Factorization g = f . s2: a match of encode(apply(f, r)) with
  // encode(apply(invert(s2), s)) recovers compose(f, s2).
  const auto key_of_first = [&](const Permutation& f) { return action.encode(action.apply(f, r)); };
  const auto key_of_second = [&](const Permutation& s2) {
    return action.encode(action.apply(invert(s2), s));
  };

  SolveReport report;
  report.conclusive = plan.deterministic();

  CollisionTable table;
  std::optional<detail::ScanHit> hit;
  if (store_second) {
    table = build_collision_table(plan.second_slices(threads), key_of_second, threads);
    hit = scan_for_hit(plan.first_slices(threads * 4), table, key_of_first, threads,
                       report.scanned_count);
  } else {
    table = build_collision_table(plan.first_slices(threads), key_of_first, threads);
    hit = scan_for_hit(plan.second_slices(threads * 4), table, key_of_second, threads,
                       report.scanned_count);
  }
  report.stored_count = table.size();

  if (hit) {
    const Permutation witness = store_second ? compose(hit->scanned, hit->stored)
                                             : compose(hit->stored, hit->scanned);
    if (!verify(action, r, s, witness))
      throw std::logic_error("solve: matched witness failed verification; encode is not injective");
    report.witness = witness;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace detail

// Meet-in-the-middle search for g with apply(g, r) == s over the plan's
// factorization. Stores the smaller factor (by exact size; ties store the
// second) and streams the other. An empty result is a proof of
// non-existence for deterministic plans and evidence otherwise.
template <GroupAction A>
SolveReport solve(const A& action, const typename A::State& r, const typename A::State& s,
                  const SplitPlan& plan, const SolveOptions& options = {}) {
  const bool store_second = plan.size_second() <= plan.size_first();
  return detail::solve_with_side(action, r, s, plan, store_second, options);
}

// Time-space tradeoff entry point: picks the subgroup whose order is closest
// to the element budget m (so the stored side stays within sqrt(2) of m) and
// scans its transversal, giving space O(m) and time O(n!/m). Requires
// 1 <= m <= sqrt(2 n!), checked in log space; the sqrt(2) slack is the same
// bracket the subgroup orders themselves live in, so any admissible order up
// to sqrt(2 n!) is a usable budget.
template <GroupAction A>
SolveReport solve_tradeoff(const A& action, const typename A::State& r,
                           const typename A::State& s, std::uint64_t m,
                           const SolveOptions& options = {}) {
  if (m < 1) throw std::invalid_argument("solve_tradeoff: budget must be >= 1");
  const int n = action.degree();
  const double log_m = std::log(static_cast<double>(m));
  const double log_limit =
      log_factorial(static_cast<double>(n)).value / 2.0 + 0.5 * std::log(2.0);
  if (log_m > log_limit + 1e-9)
    throw std::invalid_argument("solve_tradeoff: budget exceeds sqrt(2 n!)");
  const SubgroupSpec spec = choose_subgroup_params(n, LogMagnitude{log_m});
  const SplitPlan plan = SplitPlan::make_subgroup_transversal(spec);
  return detail::solve_with_side(action, r, s, plan, /*store_second=*/true, options);
}

}  // namespace permsplit
