#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

enum class ErrorCode {
    SingularQuaternion,
    NotNormalized,
    NotUnitary,
    AtProjectionPole,
    OutOfDisk,
    UndefinedPhase,
    ZOnAxis,
    DegenerateEndpoints,
    TrivialSchmidtAxis,
    Degenerate,
    FiberMismatch,
    PoleCrossing,
    LoopNotClosed,
    NotAntisymmetric,
    PathNotClosed,
    NotDensityMatrix,
    SeparableBoundary,
    BoundaryState,
    SingularAmplitude,
    OffSubbundle,
    ParseError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace qhopf
