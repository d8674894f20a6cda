#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "lacunarity/sources/stream.hpp"

namespace lacunarity::sources {

/// Quaternion-group Artin source: a monic degree-8 rational polynomial whose
/// splitting field has Galois group Q8.  Frobenius orders are read off the
/// common degree of the irreducible factors mod p; the two-dimensional irrep
/// sends orders (1, 2, 4) to traces (2, -2, 0).
struct ArtinQ8Source {
  std::array<std::int64_t, 9> coeffs{};  // low -> high, coeffs[8] == 1

  static ArtinQ8Source default_source();  // x^8 - 72x^6 + 180x^4 - 144x^2 + 36
  static ArtinQ8Source from_file(const std::string& path);  // nine integers, low -> high

  void validate_shape() const;  // monic degree 8
  std::string id() const;
};

enum class FrobResult : std::uint8_t { Order1, Order2, Order4, Ramified };

/// Factor-degree probe of the defining polynomial mod p.  Throws
/// NotGaloisConsistent on mixed degrees or an order-8 Frobenius (both signal
/// a wrong defining polynomial).
FrobResult q8_frobenius_at(const ArtinQ8Source& src, std::int64_t p);

/// Stream of traces over unramified p <= limit (weight 1).
EigenvalueStream q8_frobenius(const ArtinQ8Source& src, std::int64_t limit, int threads = 0);

struct Q8Validation {
  std::int64_t samples = 0;
  double freq_order1 = 0.0, freq_order2 = 0.0, freq_order4 = 0.0;
  double chi_square = 0.0;  // against (1/8, 1/8, 3/4)
  bool ok = false;
};

/// Statistical check that observed Frobenius-order frequencies match the Q8
/// class distribution (1/8, 1/8, 3/4).
Q8Validation validate_q8(const ArtinQ8Source& src, std::int64_t limit = 100000,
                         double chi_square_threshold = 25.0);

}  // namespace lacunarity::sources
