#include "lacunarity/bounds/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "lacunarity/errors.hpp"

namespace lacunarity::bounds {

namespace {

constexpr double kDenomEps = 1e-300;

BoundValue clamp_bound(double raw) {
  BoundValue b;
  b.raw = raw;
  b.vacuous = raw < 0.0;
  b.value = std::min(1.0, std::max(0.0, raw));
  return b;
}

RatBoundValue clamp_bound(const Rat& raw) {
  RatBoundValue b;
  b.raw = raw;
  b.vacuous = raw < Rat(0);
  b.value = std::min(Rat(1), std::max(Rat(0), raw));
  return b;
}

double thm_c_raw(long long m, double gamma) {
  const double g2 = gamma * gamma;
  const double den = static_cast<double>(m) - 2.0 * g2 + g2 * g2;
  if (std::abs(den) < kDenomEps)
    throw DegenerateDenominator("thm_c_bound: m - 2g^2 + g^4 vanishes (m=1, gamma=1)");
  return 1.0 - static_cast<double>(m - 1) / den;
}

double thm_d_denominator(long long m, long long mp, double g2) {
  const double g4 = g2 * g2;
  return g4 * g4 + (4.0 - 2.0 * mp) * g4 * g2 + (2.0 * mp + m - 12.0) * g4 +
         (4.0 * mp - 2.0 * m) * g2 + (2.0 * m - static_cast<double>(mp) * mp);
}

double thm_d_raw(long long m, long long mp, double gamma) {
  const double den = thm_d_denominator(m, mp, gamma * gamma);
  if (std::abs(den) < kDenomEps)
    throw DegenerateDenominator("thm_d_bound: degree-8 denominator vanishes");
  const double num = static_cast<double>(m) - static_cast<double>(mp) * mp + 4.0 * mp - 8.0;
  return 1.0 - num / den;
}

void validate_orders(long long m, long long mp) {
  if (m < 1 || mp < 1) throw RangeError("pole orders must be >= 1");
}

}  // namespace

double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

BoundValue thm_c_bound(long long m, double gamma) {
  if (m < 1) throw RangeError("thm_c_bound: m must be >= 1");
  return clamp_bound(thm_c_raw(m, gamma));
}

RatBoundValue thm_c_bound_exact(long long m, const Rat& gamma) {
  if (m < 1) throw RangeError("thm_c_bound: m must be >= 1");
  const Rat g2 = gamma * gamma;
  const Rat den = Rat(m) - Rat(2) * g2 + g2 * g2;
  if (den == Rat(0))
    throw DegenerateDenominator("thm_c_bound: m - 2g^2 + g^4 vanishes (m=1, gamma=1)");
  return clamp_bound(Rat(1) - Rat(m - 1) / den);
}

BoundValue thm_d_bound(long long m, long long m_prime, double gamma) {
  validate_orders(m, m_prime);
  return clamp_bound(thm_d_raw(m, m_prime, gamma));
}

RatBoundValue thm_d_bound_exact(long long m, long long mp, const Rat& gamma) {
  validate_orders(m, mp);
  const Rat g2 = gamma * gamma;
  const Rat g4 = g2 * g2;
  const Rat den = g4 * g4 + Rat(4 - 2 * mp) * g4 * g2 + Rat(2 * mp + m - 12) * g4 +
                  Rat(4 * mp - 2 * m) * g2 + Rat(2 * m - mp * mp);
  if (den == Rat(0)) throw DegenerateDenominator("thm_d_bound: denominator vanishes");
  const Rat num = Rat(m - mp * mp + 4 * mp - 8);
  return clamp_bound(Rat(1) - num / den);
}

BoundValue corollary_bound(double gamma) {
  const double g2 = gamma * gamma;
  const double den = 3.0 + g2 * (g2 - 2.0) * (g2 - 2.0) * (g2 - 2.0);
  if (std::abs(den) < kDenomEps)
    throw DegenerateDenominator("corollary_bound: 3 + g^2 (g^2-2)^3 vanishes");
  return clamp_bound(1.0 - 1.0 / den);
}

RatBoundValue corollary_bound_exact(const Rat& gamma) {
  const Rat g2 = gamma * gamma;
  const Rat t = g2 - Rat(2);
  const Rat den = Rat(3) + g2 * t * t * t;
  if (den == Rat(0))
    throw DegenerateDenominator("corollary_bound: 3 + g^2 (g^2-2)^3 vanishes");
  return clamp_bound(Rat(1) - Rat(1) / den);
}

double propf_bound(std::complex<double> alpha) {
  const double a2 = std::norm(alpha);
  return a2 / (a2 + 1.0);
}

Rat propf_bound_exact(const Rat& re, const Rat& im) {
  const Rat a2 = re * re + im * im;
  return a2 / (a2 + Rat(1));
}

Rat serre_bound(long long r) {
  if (r < 1) throw RangeError("serre_bound: r must be >= 1");
  return Rat(1) - Rat(1, r * r);
}

BoundValue ramakrishnan_bound(double k) {
  if (!(k > 0.0)) throw RangeError("ramakrishnan_bound: k must be positive");
  return clamp_bound((k * k - 1.0) / (k * k));
}

Rat theta(long long n) {
  if (n < 2) throw RangeError("theta: table starts at n = 2");
  switch (n) {
    case 2: return Rat(7, 64);
    case 3: return Rat(5, 14);
    case 4: return Rat(9, 22);
    default: return Rat(1, 2) - Rat(1, n * n + 1);
  }
}

double generic_two_moment_bound(long long m, long long m_prime, double gamma, double c) {
  validate_orders(m, m_prime);
  const double g2 = gamma * gamma;
  const double N = 2.0 - (g2 + c) + g2 * c;
  const double A = g2 * g2 - 2.0 * g2 + 2.0;
  const double B = -2.0 * m_prime + 8.0 * g2 - 2.0 * g2 * g2;
  const double C = static_cast<double>(m) - 2.0 * m_prime * g2 + 2.0 * g2 * g2;
  const double D = c * c * A + c * B + C;
  if (std::abs(D) < kDenomEps)
    throw DegenerateDenominator("generic_two_moment_bound: weight variance vanishes");
  return N * N / D;
}

double optimal_c(long long m, long long m_prime, double gamma) {
  validate_orders(m, m_prime);
  const double g2 = gamma * gamma;
  const double g4 = g2 * g2;
  const double den = -g4 + (m_prime - 2.0) * g2 + (4.0 - m_prime);
  if (std::abs(den) < 1e-12)
    throw DegenerateDenominator("optimal_c: -g^4 + (m'-2)g^2 + (4-m') vanishes");
  const double num =
      g4 * g2 + (4.0 - 2.0 * m_prime) * g4 + (m + m_prime - 8.0) * g2 + (2.0 * m_prime - m);
  return num / den;
}

CrossoverResult crossover_curves(const std::function<double(double)>& f,
                                 const std::function<double(double)>& g, double lo,
                                 double hi) {
  constexpr int kGrid = 4000;
  constexpr double kXTol = 1e-12;
  constexpr double kResidualTol = 1e-9;
  constexpr double kIdenticalTol = 1e-13;

  auto diff = [&](double x) { return f(x) - g(x); };
  auto ddiff = [&](double x) {
    const double h = 1e-6;
    return (diff(x + h) - diff(x - h)) / (2.0 * h);
  };

  const double step = (hi - lo) / kGrid;
  bool all_tiny = true;
  std::vector<double> roots;

  auto bisect = [&](auto&& fn, double a, double b) {
    double fa = fn(a);
    for (int it = 0; it < 200 && b - a > kXTol; ++it) {
      double mid = 0.5 * (a + b);
      double fm = fn(mid);
      if ((fa <= 0.0) == (fm <= 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  };

  double prev_x = lo;
  double prev_f = diff(lo);
  double prev_d = ddiff(lo);
  if (std::abs(prev_f) > kIdenticalTol) all_tiny = false;
  for (int i = 1; i <= kGrid; ++i) {
    const double x = lo + i * step;
    const double fx = diff(x);
    const double dx = ddiff(x);
    if (std::abs(fx) > kIdenticalTol) all_tiny = false;
    if ((prev_f <= 0.0) != (fx <= 0.0)) {
      roots.push_back(bisect(diff, prev_x, x));  // simple crossing
    } else if ((prev_d <= 0.0) != (dx <= 0.0)) {
      // candidate tangency: derivative sign change with a vanishing residual
      const double x0 = bisect(ddiff, prev_x, x);
      if (std::abs(diff(x0)) < kResidualTol) roots.push_back(x0);
    }
    prev_x = x;
    prev_f = fx;
    prev_d = dx;
  }

  CrossoverResult res;
  if (all_tiny) {
    res.identical = true;
    return res;
  }
  std::sort(roots.begin(), roots.end());
  for (double r : roots) {
    if (res.gammas.empty() || r - res.gammas.back() > 1e-7) res.gammas.push_back(r);
  }
  return res;
}

CrossoverResult crossover_gammas(long long m, long long m_prime, long long m_ref) {
  validate_orders(m, m_prime);
  if (m_ref < 1) throw RangeError("crossover_gammas: m_ref must be >= 1");
  return crossover_curves([=](double x) { return thm_d_raw(m, m_prime, x); },
                          [=](double x) { return thm_c_raw(m_ref, x); });
}

}  // namespace lacunarity::bounds
