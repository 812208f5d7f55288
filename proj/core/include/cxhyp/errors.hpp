#pragma once

#include <stdexcept>
#include <string>

namespace cxhyp {

// Base for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CXHYP_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                           \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

CXHYP_DEFINE_ERROR(PolarAtInfinity);
CXHYP_DEFINE_ERROR(PositiveVector);
CXHYP_DEFINE_ERROR(DegenerateSpan);
CXHYP_DEFINE_ERROR(NonPositiveDistance);
CXHYP_DEFINE_ERROR(AngleOutOfRange);
CXHYP_DEFINE_ERROR(NotUltraparallel);
CXHYP_DEFINE_ERROR(NotTransversal);
CXHYP_DEFINE_ERROR(OutOfBall);
CXHYP_DEFINE_ERROR(ParameterOutOfRange);
CXHYP_DEFINE_ERROR(NotStabilizing);
CXHYP_DEFINE_ERROR(NegativeRadius);
CXHYP_DEFINE_ERROR(NegativeInput);
CXHYP_DEFINE_ERROR(InsufficientSamples);
CXHYP_DEFINE_ERROR(NonPositiveArea);
CXHYP_DEFINE_ERROR(NonNegativeChi);
CXHYP_DEFINE_ERROR(TubeExceedsManifold);
CXHYP_DEFINE_ERROR(InvalidChi);
CXHYP_DEFINE_ERROR(GenusTooSmall);
CXHYP_DEFINE_ERROR(PointOffLine);
CXHYP_DEFINE_ERROR(NotInGeneralPosition);
CXHYP_DEFINE_ERROR(PreconditionFailed);
CXHYP_DEFINE_ERROR(DepthTooLarge);
CXHYP_DEFINE_ERROR(NeighborhoodConditionFailed);
CXHYP_DEFINE_ERROR(ConfigError);

#undef CXHYP_DEFINE_ERROR

} // namespace cxhyp
