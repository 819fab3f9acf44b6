/**
 * @file ssst/verifier.hpp
 * @copyright Apache License 2.0
 *
 * One-shot prover/verifier exchange for the decision version of the problem:
 * "is there a schedule with C_max <= threshold?". A certificate is checked by
 * walking the tree from the root to the leaf it names and comparing the leaf
 * weight against the claim and the threshold, all in O(n + m).
 *
 * Thresholds are integers. Every achievable makespan is an integer, so a
 * rational bound t is equivalent to floor(t) for "C_max <= t".
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ssst/instance.hpp"
#include "ssst/solver.hpp"
#include "ssst/tree.hpp"

namespace ssst {

struct Certificate {
  Schedule schedule;
  Time claimed_makespan = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class InvalidReason { kLengthMismatch, kInvalidMachineIndex };

inline std::string_view to_string(InvalidReason reason) {
  switch (reason) {
    case InvalidReason::kLengthMismatch:
      return "length_mismatch";
    case InvalidReason::kInvalidMachineIndex:
      return "invalid_machine_index";
  }
  return "unknown";
}

struct Accept {
  friend bool operator==(const Accept&, const Accept&) = default;
};
struct RejectInvalidSchedule {
  InvalidReason reason;
  friend bool operator==(const RejectInvalidSchedule&, const RejectInvalidSchedule&) = default;
};
struct RejectWrongMakespan {
  Time claimed;
  Time actual;
  friend bool operator==(const RejectWrongMakespan&, const RejectWrongMakespan&) = default;
};
struct RejectAboveThreshold {
  Time actual;
  Time threshold;
  friend bool operator==(const RejectAboveThreshold&, const RejectAboveThreshold&) = default;
};

using Verdict = std::variant<Accept, RejectInvalidSchedule, RejectWrongMakespan, RejectAboveThreshold>;

inline bool accepted(const Verdict& verdict) { return std::holds_alternative<Accept>(verdict); }

/// One-line machine-readable rendering, e.g. "RejectWrongMakespan claimed=2 actual=3".
inline std::string describe(const Verdict& verdict) {
  struct {
    std::string operator()(const Accept&) const { return "Accept"; }
    std::string operator()(const RejectInvalidSchedule& r) const {
      return "RejectInvalidSchedule reason=" + std::string(to_string(r.reason));
    }
    std::string operator()(const RejectWrongMakespan& r) const {
      return "RejectWrongMakespan claimed=" + std::to_string(r.claimed) +
             " actual=" + std::to_string(r.actual);
    }
    std::string operator()(const RejectAboveThreshold& r) const {
      return "RejectAboveThreshold actual=" + std::to_string(r.actual) +
             " threshold=" + std::to_string(r.threshold);
    }
  } visitor;
  return std::visit(visitor, verdict);
}

inline Verdict verify_certificate(const Instance& instance, const Certificate& cert, Time threshold) {
  const auto& schedule = cert.schedule;
  if (schedule.size() != instance.job_count()) {
    return RejectInvalidSchedule{InvalidReason::kLengthMismatch};
  }
  // Walk root to leaf; an out-of-range entry names no child.
  SsstNode node = root(instance);
  node.assignment_prefix.reserve(instance.job_count());
  for (std::size_t job = 0; job < schedule.size(); ++job) {
    if (schedule[job] < 1 || schedule[job] > instance.machine_count()) {
      return RejectInvalidSchedule{InvalidReason::kInvalidMachineIndex};
    }
    descend(instance, node, schedule[job]);
  }
  const Time actual = node.weight();
  if (cert.claimed_makespan != actual) return RejectWrongMakespan{cert.claimed_makespan, actual};
  if (actual > threshold) return RejectAboveThreshold{actual, threshold};
  return Accept{};
}

struct Decision {
  bool yes = false;
  std::optional<Certificate> witness;
};

/// Optimal certificate: the brute-force argmin and its makespan.
inline Certificate prove(const Instance& instance, const BruteForceOptions& options = {}) {
  auto solved = brute_force_opt(instance, options);
  return Certificate{std::move(solved.best_schedule), solved.optimum};
}

/// Is there a schedule with C_max <= threshold? The witness, when present,
/// verifies against the same threshold.
inline Decision decide(const Instance& instance, Time threshold,
                       const BruteForceOptions& options = {}) {
  auto cert = prove(instance, options);
  if (cert.claimed_makespan > threshold) return {};
  return Decision{true, std::move(cert)};
}

}  // namespace ssst
