#pragma once

#include <stdexcept>
#include <string>

namespace lacunarity {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- symbolic calculus ---
struct UnsupportedType : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct UnresolvedConstituent : Error { using Error::Error; };
struct NonCuspidalConstituent : Error { using Error::Error; };
struct PlaceMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// --- bound evaluators ---
struct DegenerateDenominator : Error { using Error::Error; };

// --- arithmetic sources ---
struct SingularCurve : Error { using Error::Error; };
struct NotGaloisConsistent : Error { using Error::Error; };
struct UnsupportedR : Error { using Error::Error; };
struct BadModulus : Error { using Error::Error; };
struct CacheError : Error { using Error::Error; };

// --- density estimation ---
struct ToleranceMisuse : Error { using Error::Error; };
struct BadS : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct InapplicableBound : Error { using Error::Error; };

}  // namespace lacunarity
