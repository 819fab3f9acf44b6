/**
 * @file ssst/reductions.hpp
 * @copyright Apache License 2.0
 *
 * Partition -> two-machine scheduling (p_i = w_i, threshold W/2) and
 * scheduling -> single-user multi-user scheduling, with the multi-user data
 * model and a subset-sum table used as an independent oracle.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ssst/error.hpp"
#include "ssst/instance.hpp"
#include "ssst/verifier.hpp"

namespace ssst {

// --- Partition -------------------------------------------------------------

class PartitionInstance {
 public:
  explicit PartitionInstance(std::vector<Time> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InvalidInstance("partition instance has no elements");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i] == 0) {
        throw ZeroWeight("element " + std::to_string(i + 1) + " has weight 0");
      }
      if (total_ > std::numeric_limits<Time>::max() - weights_[i]) {
        throw InvalidInstance("total weight overflows 64 bits");
      }
      total_ += weights_[i];
    }
  }

  std::span<const Time> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  Time total_weight() const noexcept { return total_; }

 private:
  std::vector<Time> weights_;
  Time total_ = 0;
};

struct TwoMachineReduction {
  Instance instance;
  Rational threshold;  // W(A) / 2
};

inline TwoMachineReduction partition_to_2psp(const PartitionInstance& pp) {
  Instance instance(2, std::vector<Time>(pp.weights().begin(), pp.weights().end()));
  return {std::move(instance), Rational(BigInt(pp.total_weight()), BigInt(2))};
}

/// Can the weights be split into two halves of equal sum? Answered through
/// the scheduling decision at threshold W/2.
inline bool decide_partition(const PartitionInstance& pp, const BruteForceOptions& options = {}) {
  if (pp.total_weight() % 2 != 0) return false;
  const auto reduced = partition_to_2psp(pp);
  return decide(reduced.instance, pp.total_weight() / 2, options).yes;
}

struct IndexPartition {
  std::vector<std::size_t> first;   // A': jobs on machine 1
  std::vector<std::size_t> second;  // A - A': jobs on machine 2

  friend bool operator==(const IndexPartition&, const IndexPartition&) = default;
};

/// Element sets read off a two-machine schedule, 1-based element numbers.
inline IndexPartition schedule_to_partition(const Schedule& schedule) {
  IndexPartition result;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    switch (schedule[i]) {
      case 1:
        result.first.push_back(i + 1);
        break;
      case 2:
        result.second.push_back(i + 1);
        break;
      default:
        throw NotTwoMachines("job " + std::to_string(i + 1) + " is on machine " +
                             std::to_string(schedule[i]));
    }
  }
  return result;
}

inline IndexPartition schedule_to_partition(const Instance& instance, const Schedule& schedule) {
  if (instance.machine_count() != 2) {
    throw NotTwoMachines("instance has " + std::to_string(instance.machine_count()) + " machines");
  }
  detail::check_length(instance, schedule.size());
  return schedule_to_partition(schedule);
}

inline constexpr std::uint64_t kDefaultSubsetSumCap = std::uint64_t{1} << 28;

/// Is there a subset of `weights` summing to `target`? Table over reachable
/// sums, O(n * sum).
inline bool subset_sum_oracle(std::span<const Time> weights, Time target,
                              std::uint64_t sum_cap = kDefaultSubsetSumCap) {
  Time sum = 0;
  for (Time w : weights) {
    if (sum > sum_cap || w > sum_cap - sum) {
      throw BudgetExceeded("subset-sum table larger than " + std::to_string(sum_cap));
    }
    sum += w;
  }
  if (target > sum) return false;
  std::vector<char> reachable(static_cast<std::size_t>(sum) + 1, 0);
  reachable[0] = 1;
  Time reach = 0;
  for (Time w : weights) {
    for (Time s = reach + 1; s-- > 0;) {
      if (reachable[s]) reachable[s + w] = 1;
    }
    reach += w;
  }
  return reachable[target] != 0;
}

// --- Multi-user ------------------------------------------------------------

class MumpspInstance {
 public:
  MumpspInstance(std::size_t machine_count, std::vector<std::vector<Time>> user_job_lists)
      : machine_count_(machine_count), users_(std::move(user_job_lists)) {
    if (machine_count_ < 2) {
      throw InvalidInstance("machine count must be at least 2, got " +
                            std::to_string(machine_count_));
    }
    if (users_.empty()) throw InvalidInstance("no users");
    for (std::size_t r = 0; r < users_.size(); ++r) {
      if (users_[r].empty()) {
        throw InvalidInstance("user " + std::to_string(r + 1) + " has no jobs");
      }
      for (std::size_t i = 0; i < users_[r].size(); ++i) {
        if (users_[r][i] < 1) {
          throw InvalidInstance("job " + std::to_string(i + 1) + " of user " +
                                std::to_string(r + 1) + " must have processing time >= 1");
        }
      }
    }
  }

  std::size_t machine_count() const noexcept { return machine_count_; }
  std::size_t user_count() const noexcept { return users_.size(); }
  const std::vector<std::vector<Time>>& users() const noexcept { return users_; }

  std::size_t job_count() const noexcept {
    std::size_t n = 0;
    for (const auto& list : users_) n += list.size();
    return n;
  }

  friend bool operator==(const MumpspInstance&, const MumpspInstance&) = default;

 private:
  std::size_t machine_count_;
  std::vector<std::vector<Time>> users_;
};

/// Job i of user r, both 1-based.
struct JobRef {
  std::size_t user = 0;
  std::size_t index = 0;

  friend bool operator==(const JobRef&, const JobRef&) = default;
  friend auto operator<=>(const JobRef&, const JobRef&) = default;
};

/// Per-machine job sequences, run back to back from time 0.
struct OrderedSchedule {
  std::vector<std::vector<JobRef>> machines;
};

/// Single-user instance carrying the same jobs in the same order.
inline MumpspInstance mpsp_to_mumpsp(const Instance& instance) {
  return MumpspInstance(instance.machine_count(),
                        {std::vector<Time>(instance.processing_times().begin(),
                                           instance.processing_times().end())});
}

/// Concatenation of the user lists in user order.
inline Instance flatten(const MumpspInstance& instance) {
  std::vector<Time> jobs;
  for (const auto& list : instance.users()) jobs.insert(jobs.end(), list.begin(), list.end());
  return Instance(instance.machine_count(), std::move(jobs));
}

/// C^r_max for every user r: the latest completion among that user's jobs.
inline std::vector<Time> mumpsp_user_makespans(const MumpspInstance& instance,
                                               const OrderedSchedule& schedule) {
  if (schedule.machines.size() != instance.machine_count()) {
    throw CoverageMismatch("schedule has " + std::to_string(schedule.machines.size()) +
                           " machines, instance has " + std::to_string(instance.machine_count()));
  }
  const auto& users = instance.users();
  std::vector<std::vector<char>> seen(users.size());
  for (std::size_t r = 0; r < users.size(); ++r) seen[r].assign(users[r].size(), 0);

  std::vector<Time> result(users.size(), 0);
  for (const auto& sequence : schedule.machines) {
    Time clock = 0;
    for (const JobRef& job : sequence) {
      if (job.user < 1 || job.user > users.size() || job.index < 1 ||
          job.index > users[job.user - 1].size()) {
        throw CoverageMismatch("unknown job (" + std::to_string(job.user) + "," +
                               std::to_string(job.index) + ")");
      }
      char& mark = seen[job.user - 1][job.index - 1];
      if (mark) {
        throw CoverageMismatch("job (" + std::to_string(job.user) + "," +
                               std::to_string(job.index) + ") scheduled twice");
      }
      mark = 1;
      clock += users[job.user - 1][job.index - 1];
      result[job.user - 1] = std::max(result[job.user - 1], clock);
    }
  }
  for (std::size_t r = 0; r < seen.size(); ++r) {
    for (std::size_t i = 0; i < seen[r].size(); ++i) {
      if (!seen[r][i]) {
        throw CoverageMismatch("job (" + std::to_string(r + 1) + "," + std::to_string(i + 1) +
                               ") not scheduled");
      }
    }
  }
  return result;
}

}  // namespace ssst
