#ifndef CHASLES_ERROR_HPP
#define CHASLES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chasles {

enum class ErrorKind {
    DegenerateHull,
    DegenerateConfiguration,
    DimensionMismatch,
    ZeroBase,
    NonInvertibleSubstitution,
    DegenerateInput,
    ZeroPolynomial,
    NotEssential,
    FaceSystemDegenerate,
    SignResolutionFailure,
    ExtraneousFactorAmbiguity,
    RationalReconstructionFailure,
    PositiveDimensional,
    IllConditioned,
    ParseError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message, long long detail = -1)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind),
          detail_(detail) {}

    ErrorKind kind() const { return kind_; }

    /// Extra numeric payload, e.g. the rank reported by DegenerateInput.
    long long detail() const { return detail_; }

  private:
    ErrorKind kind_;
    long long detail_;
};

}  // namespace chasles

#endif
