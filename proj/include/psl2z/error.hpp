#pragma once

#include <stdexcept>
#include <string>

namespace psl2z {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PSL2Z_DEFINE_ERROR(Name)     \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  };

PSL2Z_DEFINE_ERROR(ParseError)
PSL2Z_DEFINE_ERROR(NotInKernel)
PSL2Z_DEFINE_ERROR(InvalidDimension)
PSL2Z_DEFINE_ERROR(DuplicateAngles)
PSL2Z_DEFINE_ERROR(NotUnitModulus)
PSL2Z_DEFINE_ERROR(NotUnitary)
PSL2Z_DEFINE_ERROR(DimensionMismatch)
PSL2Z_DEFINE_ERROR(DegenerateSpectrum)
PSL2Z_DEFINE_ERROR(MarginInfeasible)
PSL2Z_DEFINE_ERROR(HypothesisNotMet)

#undef PSL2Z_DEFINE_ERROR

}  // namespace psl2z
