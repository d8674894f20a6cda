#include "lacunarity/sources/primes.hpp"

#include <cmath>
#include <cstddef>

namespace lacunarity::sources {

std::vector<std::int64_t> prime_sieve(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::int64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  primes.reserve(static_cast<std::size_t>(limit > 16 ? limit / (std::log(double(limit)) - 1.1)
                                                     : 8));
  for (std::int64_t p = 2; p <= limit; ++p)
    if (!composite[p]) primes.push_back(p);
  return primes;
}

std::vector<std::int64_t> first_primes(std::int64_t count) {
  if (count <= 0) return {};
  // p_n < n (ln n + ln ln n) for n >= 6
  double n = static_cast<double>(count < 6 ? 6 : count);
  std::int64_t bound = static_cast<std::int64_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
  for (;;) {
    auto primes = prime_sieve(bound);
    if (static_cast<std::int64_t>(primes.size()) >= count) {
      primes.resize(static_cast<std::size_t>(count));
      return primes;
    }
    bound *= 2;
  }
}

}  // namespace lacunarity::sources
