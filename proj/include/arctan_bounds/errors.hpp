#pragma once

#include <stdexcept>
#include <string>

namespace arctan_bounds {

/// Base class for every error raised by the library. `name()` is the
/// stable identifier the CLI prints in front of the message.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept { return "Error"; }
};

#define ARCTAN_BOUNDS_DEFINE_ERROR(Type)                              \
  class Type : public Error {                                        \
   public:                                                           \
    using Error::Error;                                              \
    const char* name() const noexcept override { return #Type; }     \
  }

// Argument outside the domain of the function (x <= 0, u <= 1, ...).
ARCTAN_BOUNDS_DEFINE_ERROR(DomainError);
// Parameter a not admissible for the requested bound or operation.
ARCTAN_BOUNDS_DEFINE_ERROR(ParamError);
// 1 + a*sqrt(1+x^2) vanishes.
ARCTAN_BOUNDS_DEFINE_ERROR(SingularityError);
ARCTAN_BOUNDS_DEFINE_ERROR(BracketError);
ARCTAN_BOUNDS_DEFINE_ERROR(ConvergenceError);
ARCTAN_BOUNDS_DEFINE_ERROR(PrecisionError);
ARCTAN_BOUNDS_DEFINE_ERROR(NoCrossingError);
ARCTAN_BOUNDS_DEFINE_ERROR(UsageError);

#undef ARCTAN_BOUNDS_DEFINE_ERROR

}  // namespace arctan_bounds
