#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frhopf {

enum class ErrorCode {
    BadArgument,
    AlphaOutOfRange,
    SyntaxError,
    UnknownFunction,
    UnboundIdentifier,
    EvalDivByZero,
    EvalNonFinite,
    EvalUnbound,
    ConvergenceFailure,
    DegenerateMinor,
    NotCritical,
    NoSignChange,
    SideConditionViolated,
    NotOnSurface,
    NewtonDiverged,
    StationaryOffSurface,
    WindowDegenerate,
    AxisUnknown,
    StepTooLarge,
    TrajectoryTooShort,
    DimensionMismatch,
};

/// Single exception type for the whole library; `code` drives the C API
/// status mapping, `offset` is meaningful for SyntaxError only.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::size_t offset = 0)
        : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

    ErrorCode code() const noexcept { return code_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    ErrorCode code_;
    std::size_t offset_;
};

inline void require_alpha(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw Error(ErrorCode::AlphaOutOfRange,
                    "fractional order alpha must lie in the open interval (1,2), got " +
                        std::to_string(alpha));
}

} // namespace frhopf
