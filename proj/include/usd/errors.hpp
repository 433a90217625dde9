#pragma once

#include <stdexcept>
#include <string>

namespace usd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

struct BadLength : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct DegenerateCoefficient : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NotCirculant : Error { using Error::Error; };
struct NegativeCoefficient : Error { using Error::Error; };

struct InadmissibleProbabilities : Error { using Error::Error; };
struct DegenerateOverlap : Error { using Error::Error; };
struct BadDistribution : Error { using Error::Error; };

struct BadGrid : Error { using Error::Error; };
struct CutoffTooLarge : Error { using Error::Error; };

} // namespace usd
