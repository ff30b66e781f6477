#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace pgsp {

using Weight = std::int64_t;

// Unreachable / +infinity sentinel. Kept well below the int64 limit so that
// sums of two sentinels still compare correctly before saturation.
inline constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

inline constexpr Weight sat_add(Weight a, Weight b) {
  if (a >= kInf || b >= kInf) return kInf;
  Weight s = a + b;
  return s >= kInf ? kInf : s;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PGSP_ERROR(Name)                         \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  }

PGSP_ERROR(NonPlanarEmbedding);
PGSP_ERROR(InvalidRotation);
PGSP_ERROR(NegativeLength);
PGSP_ERROR(BadInput);
PGSP_ERROR(NotStaircase);
PGSP_ERROR(ColumnOutOfRange);
PGSP_ERROR(ReactivationAttempt);
PGSP_ERROR(MongeViolation);
PGSP_ERROR(DoubleActivate);
PGSP_ERROR(NotRelaxed);
PGSP_ERROR(AlreadyInactive);
PGSP_ERROR(SourceNotBoundary);
PGSP_ERROR(KeyIncrease);
PGSP_ERROR(FaceNotFound);
PGSP_ERROR(NegativeResidual);
PGSP_ERROR(CyclicAfterCancellation);
PGSP_ERROR(BadParams);

#undef PGSP_ERROR

}  // namespace pgsp
