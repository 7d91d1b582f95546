#pragma once

#include <stdexcept>
#include <string>

namespace bmpp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BMPP_DEFINE_ERROR(Name)                 \
  class Name : public Error {                   \
   public:                                      \
    using Error::Error;                         \
  }

BMPP_DEFINE_ERROR(BadSpec);
BMPP_DEFINE_ERROR(NotPrime);
BMPP_DEFINE_ERROR(DivisionByZero);
BMPP_DEFINE_ERROR(ZeroDenominator);
BMPP_DEFINE_ERROR(ContextMismatch);
BMPP_DEFINE_ERROR(ZeroPolynomial);
BMPP_DEFINE_ERROR(EmptySet);
BMPP_DEFINE_ERROR(DuplicatePoint);
BMPP_DEFINE_ERROR(NotLowerSet);
BMPP_DEFINE_ERROR(SubsetViolation);
BMPP_DEFINE_ERROR(OrderingViolation);
BMPP_DEFINE_ERROR(LengthMismatch);
BMPP_DEFINE_ERROR(UnsupportedOrder);
BMPP_DEFINE_ERROR(InvalidState);
BMPP_DEFINE_ERROR(CapExceeded);
BMPP_DEFINE_ERROR(ParseError);

#undef BMPP_DEFINE_ERROR

}  // namespace bmpp
