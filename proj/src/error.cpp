#include "chasles/error.hpp"

namespace chasles {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DegenerateHull: return "DegenerateHull";
        case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ZeroBase: return "ZeroBase";
        case ErrorKind::NonInvertibleSubstitution: return "NonInvertibleSubstitution";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::NotEssential: return "NotEssential";
        case ErrorKind::FaceSystemDegenerate: return "FaceSystemDegenerate";
        case ErrorKind::SignResolutionFailure: return "SignResolutionFailure";
        case ErrorKind::ExtraneousFactorAmbiguity: return "ExtraneousFactorAmbiguity";
        case ErrorKind::RationalReconstructionFailure: return "RationalReconstructionFailure";
        case ErrorKind::PositiveDimensional: return "PositiveDimensional";
        case ErrorKind::IllConditioned: return "IllConditioned";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace chasles
