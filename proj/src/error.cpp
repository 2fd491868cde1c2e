#include "ars3d/error.hpp"

namespace ars3d {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
        case ErrorCode::InvalidLinearField: return "InvalidLinearField";
        case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
        case ErrorCode::LarcNotSatisfied: return "LarcNotSatisfied";
        case ErrorCode::NoRegularPoint: return "NoRegularPoint";
        case ErrorCode::SampleNotOnLocus: return "SampleNotOnLocus";
        case ErrorCode::WrongShape: return "WrongShape";
        case ErrorCode::UnsupportedTheta: return "UnsupportedTheta";
        case ErrorCode::CannotNormalize: return "CannotNormalize";
    }
    return "Unknown";
}

}  // namespace ars3d
