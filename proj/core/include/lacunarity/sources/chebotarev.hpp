#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lacunarity/sources/stream.hpp"

namespace lacunarity::sources {

using Rat = boost::rational<long long>;

struct ConjClass {
  std::string name;
  long long size = 0;
  std::complex<double> trace;
  long long elt_order = 1;
};

/// Finite-group conjugacy-class table with representation traces; exact
/// Frobenius-trace densities come from counting class sizes.
struct ChebotarevModel {
  long long group_order = 0;
  std::vector<ConjClass> classes;

  void validate() const;  // sizes sum to the order; identity trace = dimension
  long long dimension() const;

  static ChebotarevModel from_json(const std::string& text);
  std::string to_json() const;
};

/// Extraspecial-style model attaining the sharp zero-trace density 1 - 1/r^2:
/// r central classes of size 1 with traces r * zeta_r and r^2 - 1 classes of
/// size r with trace 0.  r = 2 yields the quaternion model.  Throws
/// UnsupportedR unless r is prime.
ChebotarevModel serre_group_model(long long r);

/// Exact density of classes satisfying the trace predicate.
Rat chebotarev_density(const ChebotarevModel& model,
                       const std::function<bool(std::complex<double>)>& predicate);

/// Reproducible class draws weighted by size/group-order, attached to the
/// first `count` primes (weight 1).
EigenvalueStream chebotarev_sample(const ChebotarevModel& model, std::int64_t count,
                                   std::uint64_t seed, const std::string& id_hint = "");

}  // namespace lacunarity::sources
