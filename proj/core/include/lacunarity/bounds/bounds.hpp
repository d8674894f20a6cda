#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <boost/rational.hpp>

namespace lacunarity::bounds {

using Rat = boost::rational<long long>;

/// A density lower bound, clamped into [0,1].  `raw` keeps the unclamped
/// value; `vacuous` is set iff clamping occurred (raw < 0).
struct BoundValue {
  double value = 0.0;
  bool vacuous = false;
  double raw = 0.0;
};

struct RatBoundValue {
  Rat value{0};
  bool vacuous = false;
  Rat raw{0};
};

/// delta(S_gamma) >= 1 - (m-1) / (m - 2 gamma^2 + gamma^4).
/// The denominator equals (gamma^2-1)^2 + (m-1), so it can only vanish for
/// m = 1 and gamma = 1 (DegenerateDenominator).
BoundValue thm_c_bound(long long m, double gamma);
RatBoundValue thm_c_bound_exact(long long m, const Rat& gamma);

/// Two-weight refinement: with fourth/sixth/eighth-moment pole orders
/// (2, m', m),
/// delta(S_gamma) >= 1 - (m - m'^2 + 4m' - 8) / D(gamma) where
/// D = g^8 + (4-2m')g^6 + (2m'+m-12)g^4 + (4m'-2m)g^2 + (2m-m'^2).
BoundValue thm_d_bound(long long m, long long m_prime, double gamma);
RatBoundValue thm_d_bound_exact(long long m, long long m_prime, const Rat& gamma);

/// Specialization (m, m') = (14, 5):
/// delta(S_gamma) >= 1 - 1 / (3 + gamma^2 (gamma^2 - 2)^3).
BoundValue corollary_bound(double gamma);
RatBoundValue corollary_bound_exact(const Rat& gamma);

/// delta(S(pi, alpha)) >= |alpha|^2 / (|alpha|^2 + 1).
double propf_bound(std::complex<double> alpha);
Rat propf_bound_exact(const Rat& re, const Rat& im);

/// Zero-trace density upper bound 1 - 1/r^2 for an irreducible r-dimensional
/// Galois representation.
Rat serre_bound(long long r);

/// delta({v : |a_v| < k}) >= (k^2 - 1) / k^2, clamped at 0 for k <= 1.
BoundValue ramakrishnan_bound(double k);

/// Bounds toward Ramanujan: theta(2)=7/64, theta(3)=5/14, theta(4)=9/22,
/// theta(n) = 1/2 - 1/(n^2+1) for n >= 5.
Rat theta(long long n);

/// The Cauchy–Schwarz density bound with quadratic weight
/// (|a|^2 - gamma^2)(|a|^2 - c) and moment data
/// (|a|^2, |a|^4, |a|^6, |a|^8) ~ (1, 2, m', m) log(1/(s-1)):
///   N(c)^2 / D(c),  N = 2 - (gamma^2 + c) + gamma^2 c,
///   D = c^2 A + c B + C with A = g^4 - 2g^2 + 2,
///   B = -2m' + 8g^2 - 2g^4,  C = m - 2m' g^2 + 2g^4.
double generic_two_moment_bound(long long m, long long m_prime, double gamma, double c);

/// The c maximizing generic_two_moment_bound:
///   c* = (g^6 + (4-2m')g^4 + (m+m'-8)g^2 + (2m'-m))
///        / (-g^4 + (m'-2)g^2 + (4-m')).
/// Validated against one-dimensional numeric maximization in the test
/// suites.  DegenerateDenominator when the denominator vanishes.
double optimal_c(long long m, long long m_prime, double gamma);

struct CrossoverResult {
  bool identical = false;           // the two bound curves coincide everywhere
  std::vector<double> gammas;       // crossing/tangency points in [0, 4]
};

/// Non-negative gamma at which thm_d_bound(m, m', .) meets
/// thm_c_bound(m_ref, .), located on [0, 4] by sign-bracketed bisection plus
/// derivative-based tangency detection (tolerance 1e-10).
CrossoverResult crossover_gammas(long long m, long long m_prime, long long m_ref);

/// Meeting points of two arbitrary curves on [lo, hi]; the machinery behind
/// crossover_gammas (simple crossings from sign changes, tangencies from
/// derivative sign changes with a residual check).
CrossoverResult crossover_curves(const std::function<double(double)>& f,
                                 const std::function<double(double)>& g,
                                 double lo = 0.0, double hi = 4.0);

double to_double(const Rat& r);

}  // namespace lacunarity::bounds
