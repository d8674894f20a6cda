#include "lacunarity/satake/satake_class.hpp"

#include <cmath>

#include "lacunarity/errors.hpp"

namespace lacunarity::satake {

namespace {

std::complex<double> ipow(std::complex<double> z, long long e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  std::complex<double> r{1.0, 0.0};
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool SatakeClass::ramanujan(double tol) const {
  for (const auto& a : params)
    if (std::abs(std::abs(a) - 1.0) > tol) return false;
  return true;
}

std::complex<double> satake_trace(const SatakeClass& c) {
  std::complex<double> t{0.0, 0.0};
  for (const auto& a : c.params) t += a;
  return t;
}

SatakeClass satake_tensor(const SatakeClass& x, const SatakeClass& y) {
  if (x.place_norm != y.place_norm)
    throw PlaceMismatch("satake_tensor: classes live at different places");
  SatakeClass r;
  r.place_norm = x.place_norm;
  r.params.reserve(x.params.size() * y.params.size());
  for (const auto& a : x.params)
    for (const auto& b : y.params) r.params.push_back(a * b);
  return r;
}

SatakeClass satake_direct_sum(const SatakeClass& x, const SatakeClass& y) {
  if (x.place_norm != y.place_norm)
    throw PlaceMismatch("satake_direct_sum: classes live at different places");
  SatakeClass r = x;
  r.params.insert(r.params.end(), y.params.begin(), y.params.end());
  return r;
}

SatakeClass sym_power_class(const SatakeClass& gl2, int k) {
  if (gl2.params.size() != 2) throw RangeError("sym_power_class: rank-2 class required");
  SatakeClass r;
  r.place_norm = gl2.place_norm;
  r.params.reserve(k + 1);
  for (int i = 0; i <= k; ++i)
    r.params.push_back(ipow(gl2.params[0], k - i) * ipow(gl2.params[1], i));
  return r;
}

SatakeClass det_twist_class(const SatakeClass& cls, const SatakeClass& gl2, long long j) {
  if (gl2.params.size() != 2) throw RangeError("det_twist_class: rank-2 class required");
  std::complex<double> det = ipow(gl2.params[0] * gl2.params[1], j);
  SatakeClass r = cls;
  for (auto& a : r.params) a *= det;
  return r;
}

SatakeClass constituent_class(const Constituent& c, const NumericContext& ctx) {
  if (c.is_induced() || c.kind() == Kind::CuspidalTensor)
    throw UnsupportedType("constituent_class: no numeric model for induced constituents");
  const SatakeClass base{{ctx.alpha, ctx.beta}, ctx.place_norm};
  const CharLabel& chr = c.char_label();
  std::complex<double> scalar = ipow(ctx.alpha * ctx.beta, c.det_exponent());
  if (chr.chi) scalar *= ctx.chi;
  if (chr.u) scalar *= ctx.u;
  scalar *= ipow(ctx.w, chr.w);
  SatakeClass r = c.is_gl2_sym() ? sym_power_class(base, c.sym_degree())
                                 : SatakeClass{{std::complex<double>{1.0, 0.0}}, ctx.place_norm};
  for (auto& a : r.params) a *= scalar;
  return r;
}

SatakeClass isobaric_class(const IsobaricRep& rep, const NumericContext& ctx) {
  SatakeClass r;
  r.place_norm = ctx.place_norm;
  for (const auto& [c, m] : rep.parts()) {
    SatakeClass piece = constituent_class(c, ctx);
    for (long long i = 0; i < m; ++i)
      r.params.insert(r.params.end(), piece.params.begin(), piece.params.end());
  }
  return r;
}

SatakeClass gl3_adjoint_class(const NumericContext& ctx) {
  return SatakeClass{{ctx.alpha * ctx.w / ctx.beta, ctx.w, ctx.beta * ctx.w / ctx.alpha},
                     ctx.place_norm};
}

}  // namespace lacunarity::satake
