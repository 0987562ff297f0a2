#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swapengine {

enum class ErrorCode {
    InvalidBath,
    InvalidPopulation,
    InvalidParams,
    LengthMismatch,
    SupportMismatch,
    XOutOfRange,
    DimMismatch,
    AsymmetricPhi,
    InvalidDensityMatrix,
    DegenerateCycle,
    NoConvergence,
    UltraHotTemperature,
    AmbiguousMaximum,
    ZeroChange,
    PreconditionUnmet,
    NotAnEngine,
    DegenerateSpectrum,
    InvalidConfig,
};

std::string_view to_string(ErrorCode code);

// Domain error carrying a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace swapengine
