#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planeop {

/// Failure categories raised by the analysis entry points.
enum class Errc {
    SingularMatrix,
    DegenerateSpectrum,
    ZeroVector,
    NotSymmetric,
    ReflectionCase,
    Indeterminate,
    InvalidEigenvalues,
    InvalidBeta,
    InvalidProfile,
    OutsideDomain,
    NotComplexSpectrum,
    DetNotOne,
    SingularBasis,
    InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace planeop
