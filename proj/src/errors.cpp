#include "qhopf/errors.hpp"

namespace qhopf {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SingularQuaternion: return "SingularQuaternion";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::AtProjectionPole: return "AtProjectionPole";
        case ErrorCode::OutOfDisk: return "OutOfDisk";
        case ErrorCode::UndefinedPhase: return "UndefinedPhase";
        case ErrorCode::ZOnAxis: return "ZOnAxis";
        case ErrorCode::DegenerateEndpoints: return "DegenerateEndpoints";
        case ErrorCode::TrivialSchmidtAxis: return "TrivialSchmidtAxis";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::FiberMismatch: return "FiberMismatch";
        case ErrorCode::PoleCrossing: return "PoleCrossing";
        case ErrorCode::LoopNotClosed: return "LoopNotClosed";
        case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorCode::PathNotClosed: return "PathNotClosed";
        case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
        case ErrorCode::SeparableBoundary: return "SeparableBoundary";
        case ErrorCode::BoundaryState: return "BoundaryState";
        case ErrorCode::SingularAmplitude: return "SingularAmplitude";
        case ErrorCode::OffSubbundle: return "OffSubbundle";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace qhopf
