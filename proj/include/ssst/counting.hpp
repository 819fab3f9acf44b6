/**
 * @file ssst/counting.hpp
 * @copyright Apache License 2.0
 *
 * Closed-form sizes of the solution space tree, in arbitrary precision.
 *
 * count_essential_formula is the published m^n - m. It only counts schedules
 * that use every machine when m = 2; for m >= 3 it also counts schedules that
 * leave some (but not all) machines empty. count_essential_exact is the
 * surjection count and is the one to use for anything other than reporting
 * the formula.
 */
#pragma once

#include <cstdint>
#include <string>

#include "ssst/error.hpp"
#include "ssst/instance.hpp"

namespace ssst {

namespace detail {

inline void require_machines(std::int64_t m) {
  if (m < 2) throw DomainError("machine count must be >= 2, got " + std::to_string(m));
}

inline void require_jobs(std::int64_t n) {
  if (n < 1) throw DomainError("job count must be >= 1, got " + std::to_string(n));
}

inline BigInt power(std::int64_t base, std::int64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

}  // namespace detail

/// Nodes of the perfect m-ary tree of height h: (m^(h+1) - 1) / (m - 1).
inline BigInt count_nodes(std::int64_t m, std::int64_t h) {
  detail::require_machines(m);
  if (h < 0) throw DomainError("height must be >= 0, got " + std::to_string(h));
  return (detail::power(m, h + 1) - 1) / (m - 1);
}

/// Leaves of the tree, i.e. all schedules: m^n.
inline BigInt count_schedules(std::int64_t m, std::int64_t n) {
  detail::require_machines(m);
  detail::require_jobs(n);
  return detail::power(m, n);
}

/// Nodes on levels 1..n-1: (m^n - m) / (m - 1).
inline BigInt count_partial(std::int64_t m, std::int64_t n) {
  detail::require_machines(m);
  detail::require_jobs(n);
  return (detail::power(m, n) - m) / (m - 1);
}

/// m^n - m, as published.
inline BigInt count_essential_formula(std::int64_t m, std::int64_t n) {
  detail::require_machines(m);
  detail::require_jobs(n);
  return detail::power(m, n) - m;
}

/// Schedules that put at least one job on every machine (surjections), by
/// inclusion-exclusion: sum_j (-1)^j C(m, j) (m - j)^n.
inline BigInt count_essential_exact(std::int64_t m, std::int64_t n) {
  detail::require_machines(m);
  detail::require_jobs(n);
  BigInt total = 0;
  BigInt binomial = 1;  // C(m, j)
  for (std::int64_t j = 0; j <= m; ++j) {
    const BigInt term = binomial * detail::power(m - j, n);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    binomial = binomial * (m - j) / (j + 1);
  }
  return total;
}

}  // namespace ssst
