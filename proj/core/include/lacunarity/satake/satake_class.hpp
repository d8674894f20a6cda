#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lacunarity/satake/isobaric.hpp"

namespace lacunarity::satake {

/// Numeric Langlands conjugacy class at one place: the diagonal of Satake
/// parameters plus the norm of the place.
struct SatakeClass {
  std::vector<std::complex<double>> params;
  std::int64_t place_norm = 2;

  std::size_t rank() const { return params.size(); }
  /// |alpha_i| = 1 for all i within tol (the Ramanujan normalization).
  bool ramanujan(double tol = 1e-9) const;
};

std::complex<double> satake_trace(const SatakeClass& c);

/// All pairwise products; trace is multiplicative.  Throws PlaceMismatch if
/// the norms differ.
SatakeClass satake_tensor(const SatakeClass& x, const SatakeClass& y);

SatakeClass satake_direct_sum(const SatakeClass& x, const SatakeClass& y);

/// Sym^k of a rank-2 class diag(alpha, beta): {alpha^{k-i} beta^i}.
SatakeClass sym_power_class(const SatakeClass& gl2, int k);

/// Multiply every parameter by det^j = (alpha*beta)^j of the rank-2 class.
SatakeClass det_twist_class(const SatakeClass& cls, const SatakeClass& gl2, long long j);

/// Numeric evaluation context for constituents built over one GL(2) class
/// diag(alpha, beta) with unit character values for chi, u, w.
struct NumericContext {
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{1.0, 0.0};
  std::complex<double> chi{1.0, 0.0};
  std::complex<double> u{1.0, 0.0};
  std::complex<double> w{1.0, 0.0};
  std::int64_t place_norm = 2;
};

/// Class of a single constituent (SymPower/Adjoint/character forms only;
/// induced constituents have no single-place numeric model here).
SatakeClass constituent_class(const Constituent& c, const NumericContext& ctx);

/// Direct sum over all constituents with multiplicity.
SatakeClass isobaric_class(const IsobaricRep& rep, const NumericContext& ctx);

/// The twisted adjoint class diag(alpha*w/beta, w, beta*w/alpha).
SatakeClass gl3_adjoint_class(const NumericContext& ctx);

}  // namespace lacunarity::satake
