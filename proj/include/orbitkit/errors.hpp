#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct InvalidForm : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct NoSolution : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidInvolution : Error { using Error::Error; };
struct NotCartanInvolution : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct ExpectationMismatch : Error { using Error::Error; };
struct NotASubalgebra : Error { using Error::Error; };
struct CertificationFailed : Error { using Error::Error; };
struct EquivalenceViolation : Error { using Error::Error; };
struct UnknownPair : Error { using Error::Error; };
struct CatalogError : Error { using Error::Error; };

// Broken internal invariant; indicates a bug rather than bad input.
struct InternalError : Error { using Error::Error; };

}  // namespace orbitkit
