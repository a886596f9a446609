#pragma once

#include <stdexcept>
#include <string>

namespace ydb {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define YDB_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

YDB_DEFINE_ERROR(DivisionByZero);
YDB_DEFINE_ERROR(ParseError);
YDB_DEFINE_ERROR(MembershipViolation);
YDB_DEFINE_ERROR(DimensionMismatch);
YDB_DEFINE_ERROR(DivergenceError);
YDB_DEFINE_ERROR(NoAntipode);
YDB_DEFINE_ERROR(OrderExceedsBound);
YDB_DEFINE_ERROR(CandidateSetIncomplete);
YDB_DEFINE_ERROR(EigenspaceTooLarge);
YDB_DEFINE_ERROR(GroupLikeSolverScope);
YDB_DEFINE_ERROR(NotAHopfSubalgebra);
YDB_DEFINE_ERROR(NotACoideal);
YDB_DEFINE_ERROR(InvalidRoot);
YDB_DEFINE_ERROR(DegenerateBicharacter);
YDB_DEFINE_ERROR(WrongCase);
YDB_DEFINE_ERROR(RelationViolation);
YDB_DEFINE_ERROR(ReconstructionFailed);
YDB_DEFINE_ERROR(UnexpectedGroup);
YDB_DEFINE_ERROR(ReplayFailure);

#undef YDB_DEFINE_ERROR

}  // namespace ydb
