#pragma once

#include <stdexcept>

namespace harnack {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NonPositiveTime : Error { using Error::Error; };
struct IdenticalPoints : Error { using Error::Error; };
struct VerticalArc : Error { using Error::Error; };
struct DegenerateDirection : Error { using Error::Error; };
struct DegenerateConfiguration : Error { using Error::Error; };
struct NonPositiveDimension : Error { using Error::Error; };
struct NonForwardTimes : Error { using Error::Error; };
struct QuadratureNonConvergence : Error { using Error::Error; };
struct TailEstimateFailure : Error { using Error::Error; };
struct ResolutionExceeded : Error { using Error::Error; };
struct UnsupportedDimension : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };
struct InvalidScenario : Error { using Error::Error; };

}  // namespace harnack
