#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace lacunarity::sources {

struct StreamEntry {
  std::int64_t prime = 0;
  std::complex<double> raw;         // exact eigenvalue data (integral for most sources)
  std::complex<double> normalized;  // raw / p^{(w-1)/2}
  bool exact_zero = false;          // decided by exact arithmetic upstream, never floats
};

/// Ordered sequence of (prime, exact eigenvalue, normalized trace) with bad
/// primes excluded.
struct EigenvalueStream {
  std::string source_id;
  int weight = 1;          // normalization weight w
  std::int64_t limit = 0;  // prime bound (sample count for synthetic streams)
  bool exact = true;       // entries carry exact values
  std::vector<StreamEntry> entries;

  void validate() const;  // strictly increasing primes; Error on violation
};

}  // namespace lacunarity::sources
