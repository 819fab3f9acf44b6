/**
 * @file ssst/error.hpp
 * @copyright Apache License 2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace ssst {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SSST_DEFINE_ERROR(Name)                  \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what_arg)   \
        : Error(#Name ": " + what_arg) {}        \
  }

SSST_DEFINE_ERROR(InvalidInstance);
SSST_DEFINE_ERROR(InvalidSchedule);
SSST_DEFINE_ERROR(LengthMismatch);
SSST_DEFINE_ERROR(InvalidMachineIndex);
SSST_DEFINE_ERROR(LeafHasNoChildren);
SSST_DEFINE_ERROR(DomainError);
SSST_DEFINE_ERROR(TooLarge);
SSST_DEFINE_ERROR(BudgetExceeded);
SSST_DEFINE_ERROR(NotTwoMachines);
SSST_DEFINE_ERROR(ZeroWeight);
SSST_DEFINE_ERROR(CoverageMismatch);
SSST_DEFINE_ERROR(ParseError);

#undef SSST_DEFINE_ERROR

}  // namespace ssst
