#pragma once

#include <stdexcept>
#include <string>

namespace t2conv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define T2CONV_DEFINE_ERROR(Name)         \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

T2CONV_DEFINE_ERROR(OverlappingSummands);
T2CONV_DEFINE_ERROR(DegenerateSummand);
T2CONV_DEFINE_ERROR(BadShape);
T2CONV_DEFINE_ERROR(NotInLu);
T2CONV_DEFINE_ERROR(NotNested);
T2CONV_DEFINE_ERROR(NotContinuous);
T2CONV_DEFINE_ERROR(HypothesisViolation);
T2CONV_DEFINE_ERROR(GridMismatch);
T2CONV_DEFINE_ERROR(NotACounterexample);
T2CONV_DEFINE_ERROR(ParseError);

#undef T2CONV_DEFINE_ERROR

}  // namespace t2conv
