#pragma once

#include <stdexcept>
#include <string>

namespace linedyn {

// All faults derive from Error so callers that only care about "outside the
// domain" can catch one type. Outcomes that are ordinary answers (a polynomial
// not being divisible, an element not being a square) are std::optional
// instead and never appear here.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define LINEDYN_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what = #Name) : Error(what) {}    \
    const char* kind() const noexcept override { return #Name; }       \
  };

LINEDYN_DEFINE_ERROR(NonInvertible)
LINEDYN_DEFINE_ERROR(FieldMismatch)
LINEDYN_DEFINE_ERROR(ParseError)
LINEDYN_DEFINE_ERROR(IdenticalLines)
LINEDYN_DEFINE_ERROR(NonGenericFrame)
LINEDYN_DEFINE_ERROR(DuplicateLines)
LINEDYN_DEFINE_ERROR(DegenerateOperator)
LINEDYN_DEFINE_ERROR(DegenerateRealization)
LINEDYN_DEFINE_ERROR(IndeterminacyPoint)
LINEDYN_DEFINE_ERROR(LinearSolveDegenerate)
LINEDYN_DEFINE_ERROR(ChartSingular)
LINEDYN_DEFINE_ERROR(BudgetExceeded)
LINEDYN_DEFINE_ERROR(CertificationFailed)
LINEDYN_DEFINE_ERROR(UnsupportedDegree)
LINEDYN_DEFINE_ERROR(UnknownCase)
LINEDYN_DEFINE_ERROR(NoLift)

#undef LINEDYN_DEFINE_ERROR

}  // namespace linedyn
