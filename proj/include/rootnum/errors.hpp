#pragma once

#include <stdexcept>
#include <string>

namespace rootnum {

/// Base class for all domain errors raised by the library. `code()` is a
/// stable machine-readable tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define ROOTNUM_DEFINE_ERROR(NAME)                        \
  class NAME : public Error {                             \
   public:                                                \
    explicit NAME(const std::string& msg)                 \
        : Error(#NAME, msg) {}                            \
  }

ROOTNUM_DEFINE_ERROR(NotAUnit);
ROOTNUM_DEFINE_ERROR(NonMonic);
ROOTNUM_DEFINE_ERROR(NotSymplectic);
ROOTNUM_DEFINE_ERROR(NotADivisor);
ROOTNUM_DEFINE_ERROR(GroupMismatch);
ROOTNUM_DEFINE_ERROR(IndicatorNotIntegral);
ROOTNUM_DEFINE_ERROR(UndefinedIndicator);
ROOTNUM_DEFINE_ERROR(NotSymplecticFeasible);
ROOTNUM_DEFINE_ERROR(IrrationalRestriction);
ROOTNUM_DEFINE_ERROR(RankDeficient);
ROOTNUM_DEFINE_ERROR(WeightViolation);
ROOTNUM_DEFINE_ERROR(DimensionMismatch);
ROOTNUM_DEFINE_ERROR(RankOrder);
ROOTNUM_DEFINE_ERROR(LedgerInvalid);
ROOTNUM_DEFINE_ERROR(UnsupportedBranch);
ROOTNUM_DEFINE_ERROR(SchemaError);
ROOTNUM_DEFINE_ERROR(InconsistentGroup);

#undef ROOTNUM_DEFINE_ERROR

}  // namespace rootnum
