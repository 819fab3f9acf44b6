/**
 * @file ssst/instance.hpp
 * @copyright Apache License 2.0
 *
 * Problem instances of makespan minimization on identical parallel machines,
 * schedules as total job -> machine maps, and the exact load arithmetic shared
 * by the tree, solver, verifier and reductions.
 *
 * Machines are numbered 1..m everywhere a machine index is stored or printed.
 * Jobs are positional: job i is the i-th processing time.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ssst/error.hpp"

namespace ssst {

using Time = std::uint64_t;
using MachineId = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Instance {
 public:
  Instance(std::size_t machine_count, std::vector<Time> processing_times)
      : machine_count_(machine_count), processing_times_(std::move(processing_times)) {
    if (machine_count_ < 2) {
      throw InvalidInstance("machine count must be at least 2, got " +
                            std::to_string(machine_count_));
    }
    if (machine_count_ > std::numeric_limits<MachineId>::max()) {
      throw InvalidInstance("machine count too large");
    }
    if (processing_times_.empty()) {
      throw InvalidInstance("job list is empty");
    }
    for (std::size_t i = 0; i < processing_times_.size(); ++i) {
      const Time p = processing_times_[i];
      if (p < 1) {
        throw InvalidInstance("processing time of job " + std::to_string(i + 1) +
                              " must be >= 1");
      }
      if (total_work_ > std::numeric_limits<Time>::max() - p) {
        throw InvalidInstance("total work overflows 64 bits");
      }
      total_work_ += p;
      max_processing_time_ = std::max(max_processing_time_, p);
    }
  }

  std::size_t machine_count() const noexcept { return machine_count_; }
  std::size_t job_count() const noexcept { return processing_times_.size(); }
  std::span<const Time> processing_times() const noexcept { return processing_times_; }
  Time processing_time(std::size_t job) const { return processing_times_.at(job); }
  Time total_work() const noexcept { return total_work_; }
  Time max_processing_time() const noexcept { return max_processing_time_; }

  /// ceil(total_work / m) and max p_i, whichever is larger.
  Time makespan_lower_bound() const noexcept {
    const Time m = machine_count_;
    const Time averaged = total_work_ / m + (total_work_ % m != 0 ? 1 : 0);
    return std::max(averaged, max_processing_time_);
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t machine_count_;
  std::vector<Time> processing_times_;
  Time total_work_ = 0;
  Time max_processing_time_ = 0;
};

inline Instance make_instance(std::size_t machine_count, std::vector<Time> processing_times) {
  return Instance(machine_count, std::move(processing_times));
}

/// A complete assignment: entry i is the (1-based) machine of job i.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<MachineId> assignment) : assignment_(std::move(assignment)) {}
  Schedule(std::initializer_list<MachineId> assignment) : assignment_(assignment) {}

  /// Builds a schedule from the job-set view J^1..J^m (0-based job indices).
  /// The sets must be pairwise disjoint and cover 0..job_count-1.
  static Schedule from_job_sets(std::size_t job_count,
                                const std::vector<std::vector<std::size_t>>& job_sets) {
    std::vector<MachineId> assignment(job_count, 0);
    for (std::size_t machine = 0; machine < job_sets.size(); ++machine) {
      for (std::size_t job : job_sets[machine]) {
        if (job >= job_count) {
          throw InvalidSchedule("job index " + std::to_string(job) + " out of range");
        }
        if (assignment[job] != 0) {
          throw InvalidSchedule("job " + std::to_string(job) + " assigned twice");
        }
        assignment[job] = static_cast<MachineId>(machine + 1);
      }
    }
    for (std::size_t job = 0; job < job_count; ++job) {
      if (assignment[job] == 0) {
        throw InvalidSchedule("job " + std::to_string(job) + " not assigned");
      }
    }
    return Schedule(std::move(assignment));
  }

  std::size_t size() const noexcept { return assignment_.size(); }
  std::span<const MachineId> assignment() const noexcept { return assignment_; }
  MachineId operator[](std::size_t job) const { return assignment_[job]; }

  /// Job sets J^1..J^m, 0-based job indices in increasing order.
  std::vector<std::vector<std::size_t>> job_sets(std::size_t machine_count) const {
    std::vector<std::vector<std::size_t>> sets(machine_count);
    for (std::size_t job = 0; job < assignment_.size(); ++job) {
      if (assignment_[job] < 1 || assignment_[job] > machine_count) {
        throw InvalidMachineIndex("job " + std::to_string(job + 1) + " on machine " +
                                  std::to_string(assignment_[job]));
      }
      sets[assignment_[job] - 1].push_back(job);
    }
    return sets;
  }

  friend bool operator==(const Schedule&, const Schedule&) = default;
  friend auto operator<=>(const Schedule&, const Schedule&) = default;

 private:
  std::vector<MachineId> assignment_;
};

/// Assignment of a strict non-empty prefix of the jobs.
class PartialSchedule {
 public:
  PartialSchedule(const Instance& instance, std::vector<MachineId> prefix)
      : prefix_(std::move(prefix)) {
    if (prefix_.empty() || prefix_.size() >= instance.job_count()) {
      throw LengthMismatch("partial schedule length " + std::to_string(prefix_.size()) +
                           " not in [1, " + std::to_string(instance.job_count() - 1) + "]");
    }
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
      if (prefix_[i] < 1 || prefix_[i] > instance.machine_count()) {
        throw InvalidMachineIndex("job " + std::to_string(i + 1) + " on machine " +
                                  std::to_string(prefix_[i]));
      }
    }
  }

  std::size_t size() const noexcept { return prefix_.size(); }
  std::span<const MachineId> assignment_prefix() const noexcept { return prefix_; }

 private:
  std::vector<MachineId> prefix_;
};

namespace detail {

inline void check_length(const Instance& instance, std::size_t length) {
  if (length != instance.job_count()) {
    throw LengthMismatch("schedule has " + std::to_string(length) + " entries, instance has " +
                         std::to_string(instance.job_count()) + " jobs");
  }
}

inline void check_machine(const Instance& instance, std::size_t job, MachineId machine) {
  if (machine < 1 || machine > instance.machine_count()) {
    throw InvalidMachineIndex("job " + std::to_string(job + 1) + " assigned to machine " +
                              std::to_string(machine) + ", valid range is 1.." +
                              std::to_string(instance.machine_count()));
  }
}

}  // namespace detail

/// Per-machine loads l_1..l_m.
inline std::vector<Time> loads(const Instance& instance, const Schedule& schedule) {
  detail::check_length(instance, schedule.size());
  std::vector<Time> result(instance.machine_count(), 0);
  for (std::size_t job = 0; job < schedule.size(); ++job) {
    detail::check_machine(instance, job, schedule[job]);
    result[schedule[job] - 1] += instance.processing_time(job);
  }
  return result;
}

inline Time makespan(const Instance& instance, const Schedule& schedule) {
  const auto l = loads(instance, schedule);
  return *std::max_element(l.begin(), l.end());
}

/// True iff every machine receives at least one job.
inline bool is_essential(const Instance& instance, const Schedule& schedule) {
  const auto l = loads(instance, schedule);
  return std::none_of(l.begin(), l.end(), [](Time load) { return load == 0; });
}

/// Exact total_work / m. A lower bound on the optimum, not always attained.
inline Rational theoretical_opt(const Instance& instance) {
  return Rational(BigInt(instance.total_work()), BigInt(instance.machine_count()));
}

}  // namespace ssst
