#pragma once

#include <stdexcept>
#include <string>

namespace gorwb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GORWB_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

GORWB_DEFINE_ERROR(InputShapeError)
GORWB_DEFINE_ERROR(InvalidAlgebra)
GORWB_DEFINE_ERROR(InfiniteDimensional)
GORWB_DEFINE_ERROR(MalformedRelation)
GORWB_DEFINE_ERROR(NotAGroup)
GORWB_DEFINE_ERROR(UnsupportedAlgebra)
GORWB_DEFINE_ERROR(InvalidModule)
GORWB_DEFINE_ERROR(AlgebraMismatch)
GORWB_DEFINE_ERROR(LiftFailed)
GORWB_DEFINE_ERROR(NoHomotopy)
GORWB_DEFINE_ERROR(ProfileNotCertified)
GORWB_DEFINE_ERROR(PreconditionFailed)
GORWB_DEFINE_ERROR(ParseError)
/// An internal identity failed to hold; the message names it.
GORWB_DEFINE_ERROR(VerificationFailure)

#undef GORWB_DEFINE_ERROR

}  // namespace gorwb
