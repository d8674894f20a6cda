#pragma once

#include <cstdint>
#include <vector>

namespace lacunarity::sources {

/// All primes <= limit, ascending (empty for limit < 2).
std::vector<std::int64_t> prime_sieve(std::int64_t limit);

/// At least the first `count` primes, ascending.
std::vector<std::int64_t> first_primes(std::int64_t count);

}  // namespace lacunarity::sources
