#pragma once

#include <cstdint>

#include "lacunarity/sources/stream.hpp"

namespace lacunarity::sources {

/// Kronecker symbol (a | n) for n > 0.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// Stream of chi(p) for a real quadratic Dirichlet character modulo
/// `modulus`, p not dividing the modulus (weight 1).  Supported moduli:
/// odd squarefree m >= 3 (Jacobi symbol, index 1), m = 4 (the character of
/// conductor 4), m = 8 (index 1: conductor 8; index 2: conductor -8).
/// Throws BadModulus otherwise.
EigenvalueStream dirichlet_character_stream(std::int64_t modulus, int index,
                                            std::int64_t limit);

}  // namespace lacunarity::sources
