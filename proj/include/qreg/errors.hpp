#pragma once

#include <stdexcept>
#include <string>

namespace qreg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quaternion with norm below the configured threshold was asked for an inverse.
struct NearZero : Error {
    using Error::Error;
};

// Cullen decomposition requested on (or too close to) the real axis, where
// the imaginary direction iota is undefined.
struct OnRealAxis : Error {
    using Error::Error;
};

// beta outside the allowed band; the frame inverses carry (sin beta)^{-1}
// factors and are not usable at the poles.
struct PolarSingularity : Error {
    using Error::Error;
};

// Series reciprocal requested for a series whose constant term is too small.
struct NotUnit : Error {
    using Error::Error;
};

// Symmetrization produced coefficients with non-negligible imaginary parts.
struct NotReal : Error {
    using Error::Error;
};

// Pointwise reciprocal at a point where the symmetrization vanishes.
struct SymmetrizationZero : Error {
    using Error::Error;
};

struct OutOfDomain : Error {
    using Error::Error;
};

struct UnknownSuite : Error {
    using Error::Error;
};

struct InvalidConfig : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace qreg
