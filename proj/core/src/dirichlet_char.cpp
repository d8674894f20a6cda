#include "lacunarity/sources/dirichlet_char.hpp"

#include <sstream>

#include "lacunarity/errors.hpp"
#include "lacunarity/sources/primes.hpp"

namespace lacunarity::sources {

namespace {

bool squarefree_odd(std::int64_t m) {
  if (m % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= m; d += 2)
    if (m % (d * d) == 0) return false;
  return true;
}

// chi(p) for the supported real quadratic characters
int chi_value(std::int64_t modulus, int index, std::int64_t p) {
  if (modulus == 4) return p % 4 == 1 ? 1 : -1;
  if (modulus == 8) {
    const std::int64_t r = p % 8;
    if (index == 1) return (r == 1 || r == 7) ? 1 : -1;  // conductor 8
    return (r == 1 || r == 3) ? 1 : -1;                  // conductor -8
  }
  return kronecker_symbol(p, modulus);  // Jacobi symbol, odd modulus
}

}  // namespace

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw RangeError("kronecker_symbol: n must be positive");
  if (n % 2 == 0) throw RangeError("kronecker_symbol: even n unsupported here");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

EigenvalueStream dirichlet_character_stream(std::int64_t modulus, int index,
                                            std::int64_t limit) {
  const bool ok_mod =
      (modulus == 4 && index == 1) || (modulus == 8 && (index == 1 || index == 2)) ||
      (modulus >= 3 && squarefree_odd(modulus) && index == 1);
  if (!ok_mod)
    throw BadModulus("no quadratic character implemented for modulus " +
                     std::to_string(modulus) + ", index " + std::to_string(index));

  EigenvalueStream s;
  std::ostringstream id;
  id << "dirichlet:" << modulus << "," << index;
  s.source_id = id.str();
  s.weight = 1;
  s.limit = limit;
  for (std::int64_t p : prime_sieve(limit)) {
    if (modulus % p == 0) continue;  // ramified
    const int v = chi_value(modulus, index, p);
    StreamEntry e;
    e.prime = p;
    e.raw = {static_cast<double>(v), 0.0};
    e.normalized = e.raw;
    e.exact_zero = false;  // order-two character values are units
    s.entries.push_back(e);
  }
  s.validate();
  return s;
}

}  // namespace lacunarity::sources
