/**
 * @file ssst/solver.hpp
 * @copyright Apache License 2.0
 *
 * Exact optimal makespans over the weighted solution space tree, and the
 * two-machine Magic Scheduling decision procedure with an explicit choice of
 * how its partition is selected.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "ssst/error.hpp"
#include "ssst/instance.hpp"
#include "ssst/tree.hpp"

namespace ssst {

struct SolveResult {
  Schedule best_schedule;
  Time optimum = 0;
  BigInt leaves_explored = 0;
  BigInt nodes_pruned = 0;
};

inline constexpr std::uint64_t kDefaultLeafCap = std::uint64_t{1} << 26;

struct BruteForceOptions {
  std::uint64_t leaf_cap = kDefaultLeafCap;
  unsigned threads = 1;
};

struct BranchAndBoundOptions {
  /// Branch on jobs by non-increasing processing time instead of input order.
  bool longest_first = false;
};

namespace detail {

/// m^n, or BudgetExceeded if it is above `cap`.
inline std::uint64_t leaf_count_within(const Instance& instance, std::uint64_t cap) {
  BigInt count = 1;
  for (std::size_t i = 0; i < instance.job_count(); ++i) {
    count *= instance.machine_count();
    if (count > cap) {
      throw BudgetExceeded("m^n = " + std::to_string(instance.machine_count()) + "^" +
                           std::to_string(instance.job_count()) + " leaves exceed the cap of " +
                           std::to_string(cap));
    }
  }
  return static_cast<std::uint64_t>(count);
}

struct SubtreeBest {
  Time weight = std::numeric_limits<Time>::max();
  std::vector<MachineId> assignment;
};

inline SubtreeBest best_leaf(const Instance& instance, std::vector<MachineId> prefix) {
  SubtreeBest best;
  const LeafRange range(instance, std::move(prefix));
  for (auto it = range.begin(); it != range.end(); ++it) {
    const Time w = it.weight();
    if (w < best.weight) {
      best.weight = w;
      best.assignment.assign(it.assignment().begin(), it.assignment().end());
    }
  }
  return best;
}

}  // namespace detail

/// Minimum leaf weight over all m^n leaves. The reported schedule is the
/// lexicographically least minimizer regardless of the thread count.
inline SolveResult brute_force_opt(const Instance& instance, const BruteForceOptions& options = {}) {
  const std::uint64_t total_leaves = detail::leaf_count_within(instance, options.leaf_cap);
  const std::size_t m = instance.machine_count();
  const unsigned threads = std::max(1u, options.threads);

  // Split at the shallowest level with a few subtrees per worker.
  std::size_t split_level = 0;
  std::uint64_t subtrees = 1;
  if (threads > 1) {
    while (split_level < instance.job_count() && subtrees < std::uint64_t{4} * threads) {
      subtrees *= m;
      ++split_level;
    }
  }

  std::vector<detail::SubtreeBest> results(subtrees);
  if (threads == 1 || subtrees == 1) {
    for (std::uint64_t k = 0; k < subtrees; ++k) {
      results[k] = detail::best_leaf(instance, prefix_at(m, split_level, k));
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < std::min<std::uint64_t>(threads, subtrees); ++t) {
      workers.emplace_back([&] {
        for (std::uint64_t k = next++; k < subtrees; k = next++) {
          results[k] = detail::best_leaf(instance, prefix_at(m, split_level, k));
        }
      });
    }
  }

  // Subtrees are in lexicographic order, so the first strict minimum wins.
  std::size_t winner = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (results[k].weight < results[winner].weight) winner = k;
  }
  SolveResult result;
  result.best_schedule = Schedule(std::move(results[winner].assignment));
  result.optimum = results[winner].weight;
  result.leaves_explored = total_leaves;
  result.nodes_pruned = 0;
  return result;
}

namespace detail {

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, const BranchAndBoundOptions& options)
      : instance_(instance),
        order_(instance.job_count()),
        loads_(instance.machine_count(), 0),
        current_(instance.job_count(), 0),
        lower_bound_(instance.makespan_lower_bound()) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    if (options.longest_first) {
      std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
        return instance.processing_time(a) > instance.processing_time(b);
      });
    }
    // largest_remaining_[d] = max p over jobs at depth >= d.
    largest_remaining_.assign(order_.size() + 1, 0);
    for (std::size_t d = order_.size(); d > 0; --d) {
      largest_remaining_[d - 1] =
          std::max(largest_remaining_[d], instance.processing_time(order_[d - 1]));
    }
  }

  SolveResult run() {
    search(0, 0);
    SolveResult result;
    std::vector<MachineId> assignment(order_.size());
    for (std::size_t d = 0; d < order_.size(); ++d) assignment[order_[d]] = best_[d];
    result.best_schedule = Schedule(std::move(assignment));
    result.optimum = incumbent_;
    result.leaves_explored = leaves_;
    result.nodes_pruned = pruned_;
    return result;
  }

 private:
  // Lower bound on any leaf below the current node after placing the job at
  // `depth` on `machine` with resulting node weight `weight`.
  Time child_bound(std::size_t depth, std::size_t machine, Time weight) const {
    Time bound = std::max(weight, lower_bound_);
    if (depth + 1 < order_.size()) {
      const Time p = instance_.processing_time(order_[depth]);
      Time least = std::numeric_limits<Time>::max();
      for (std::size_t j = 0; j < loads_.size(); ++j) {
        least = std::min(least, loads_[j] + (j == machine ? p : 0));
      }
      bound = std::max(bound, least + largest_remaining_[depth + 1]);
    }
    return bound;
  }

  bool search(std::size_t depth, Time weight) {
    if (depth == order_.size()) {
      ++leaves_;
      if (weight < incumbent_) {
        incumbent_ = weight;
        best_ = current_;
      }
      return incumbent_ == lower_bound_;
    }
    const Time p = instance_.processing_time(order_[depth]);
    for (std::size_t j = 0; j < loads_.size(); ++j) {
      // Machines with equal loads root isomorphic subtrees; keep the first.
      if (std::find(loads_.begin(), loads_.begin() + static_cast<std::ptrdiff_t>(j), loads_[j]) !=
          loads_.begin() + static_cast<std::ptrdiff_t>(j)) {
        ++pruned_;
        continue;
      }
      const Time child_weight = std::max(weight, loads_[j] + p);
      if (child_bound(depth, j, child_weight) >= incumbent_) {
        ++pruned_;
        continue;
      }
      loads_[j] += p;
      current_[depth] = static_cast<MachineId>(j + 1);
      const bool done = search(depth + 1, child_weight);
      loads_[j] -= p;
      if (done) return true;
    }
    return false;
  }

  const Instance& instance_;
  std::vector<std::size_t> order_;
  std::vector<Time> largest_remaining_;
  std::vector<Time> loads_;
  std::vector<MachineId> current_;
  std::vector<MachineId> best_;
  Time lower_bound_;
  Time incumbent_ = std::numeric_limits<Time>::max();
  std::uint64_t leaves_ = 0;
  std::uint64_t pruned_ = 0;
};

}  // namespace detail

/// Depth-first branch and bound, machine 1 first. The first leaf reached
/// seeds the incumbent; a child is cut when its lower bound (node weight,
/// ceil(total/m), least load plus largest remaining job) reaches the
/// incumbent. Subtrees under machines with equal current loads are skipped
/// after the first. Always returns the exact optimum.
inline SolveResult branch_and_bound(const Instance& instance,
                                    const BranchAndBoundOptions& options = {}) {
  return detail::BranchAndBound(instance, options).run();
}

// --- Magic Scheduling ------------------------------------------------------

/// Try every leaf in lexicographic order.
struct ExhaustiveSelection {
  std::uint64_t leaf_cap = kDefaultLeafCap;
};

/// Evaluate exactly the given schedule.
struct CertificateSelection {
  Schedule schedule;
};

/// Sample assignments uniformly at random.
struct RandomSelection {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
};

using SelectPartitionStrategy =
    std::variant<ExhaustiveSelection, CertificateSelection, RandomSelection>;

struct MsOutcome {
  /// Set on Success: a two-machine schedule whose makespan is total_work / 2.
  std::optional<Schedule> partition;

  bool success() const noexcept { return partition.has_value(); }
};

/// Two-machine Magic Scheduling: succeeds iff the selected partition has
/// C_max equal to half the total work exactly. Odd totals always fail.
inline MsOutcome magic_schedule(const Instance& instance, const SelectPartitionStrategy& strategy) {
  if (instance.machine_count() != 2) {
    throw NotTwoMachines("magic scheduling needs m = 2, got " +
                         std::to_string(instance.machine_count()));
  }
  const Time total = instance.total_work();
  // C_max = total / 2 compared without division; an integer never equals a half.
  const auto balanced = [total](Time c_max) { return total % 2 == 0 && c_max == total / 2; };

  return std::visit(
      [&](const auto& s) -> MsOutcome {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ExhaustiveSelection>) {
          detail::leaf_count_within(instance, s.leaf_cap);
          if (total % 2 != 0) return {};
          const LeafRange range(instance);
          for (auto it = range.begin(); it != range.end(); ++it) {
            if (balanced(it.weight())) return {*it};
          }
          return {};
        } else if constexpr (std::is_same_v<S, CertificateSelection>) {
          const SsstNode leaf = walk_to_leaf(instance, s.schedule);
          if (balanced(leaf.weight())) return {s.schedule};
          return {};
        } else {
          std::mt19937_64 rng(s.seed);
          std::uniform_int_distribution<MachineId> pick(1, 2);
          std::vector<MachineId> assignment(instance.job_count());
          for (std::uint64_t trial = 0; trial < s.trials; ++trial) {
            Time first = 0;
            for (std::size_t job = 0; job < assignment.size(); ++job) {
              assignment[job] = pick(rng);
              if (assignment[job] == 1) first += instance.processing_time(job);
            }
            if (balanced(std::max(first, total - first))) return {Schedule(assignment)};
          }
          return {};
        }
      },
      strategy);
}

}  // namespace ssst
