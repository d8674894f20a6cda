#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lacunarity/sources/stream.hpp"

namespace lacunarity::sources {

/// Elliptic curve over the rationals in long Weierstrass form
///   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
/// Bad primes are the primes dividing the discriminant.
struct EllipticCurveSource {
  std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  /// Throws SingularCurve when the discriminant vanishes.
  void validate() const;

  bool good_at(std::int64_t p) const;  // p does not divide the discriminant

  /// Exact j-invariant test against the thirteen rational CM values.
  bool has_cm() const;

  std::string id() const;  // "ec:a1,a2,a3,a4,a6"

  static EllipticCurveSource parse(const std::string& spec);  // "ec:..." or "a1,a2,..."
};

/// Trace of Frobenius a_p = p + 1 - #E(F_p) by quadratic-character point
/// counting (exhaustive enumeration at p = 2).  Requires good reduction.
std::int64_t ec_trace(const EllipticCurveSource& curve, std::int64_t p);

/// Stream of (p, a_p, a_p / sqrt(p)) over good primes p <= limit (weight 2).
/// Hasse |a_p| <= 2 sqrt(p) is asserted for every entry.  threads = 0 picks
/// the hardware concurrency.
EigenvalueStream ec_eigenvalues(const EllipticCurveSource& curve, std::int64_t limit,
                                int threads = 0);

}  // namespace lacunarity::sources
