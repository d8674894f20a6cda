#include "lacunarity/sources/stream.hpp"

#include "lacunarity/errors.hpp"

namespace lacunarity::sources {

void EigenvalueStream::validate() const {
  std::int64_t last = 0;
  for (const auto& e : entries) {
    if (e.prime <= last)
      throw Error("stream " + source_id + ": primes must be strictly increasing");
    last = e.prime;
  }
}

}  // namespace lacunarity::sources
