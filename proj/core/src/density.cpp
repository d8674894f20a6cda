#include "lacunarity/density/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lacunarity/errors.hpp"

namespace lacunarity::density {

namespace {

constexpr double kExactSquaredTol = 1e-9;  // |.|^2 comparisons on exact data
constexpr double kValueTol = 1e-9;

bool abs_matches(const sources::StreamEntry& e, double gamma, double tol) {
  if (gamma == 0.0) return e.exact_zero;
  const double lhs = std::norm(e.normalized);
  return std::abs(lhs - gamma * gamma) <= (tol > 0.0 ? tol : kExactSquaredTol);
}

bool value_matches(const sources::StreamEntry& e, std::complex<double> alpha, double tol) {
  if (alpha == std::complex<double>{0.0, 0.0}) return e.exact_zero;
  return std::abs(e.normalized - alpha) <= (tol > 0.0 ? tol : kValueTol);
}

}  // namespace

std::string SetSpec::text() const {
  std::ostringstream os;
  auto num = [&](std::complex<double> z) {
    if (z.imag() == 0.0) {
      os << z.real();
    } else {
      os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    }
  };
  switch (mode) {
    case SetMode::AbsEquals: os << "|a| = "; num(target); break;
    case SetMode::AbsNotEquals: os << "|a| != "; num(target); break;
    case SetMode::ValueEquals: os << "a = "; num(target); break;
    case SetMode::ValueNotEquals: os << "a != "; num(target); break;
    case SetMode::AbsAtMost: os << "|a| <= "; num(target); break;
    case SetMode::AbsGreaterThan: os << "|a| > "; num(target); break;
  }
  return os.str();
}

std::int64_t Membership::member_count() const {
  std::int64_t n = 0;
  for (char m : member) n += (m != 0);
  return n;
}

Membership classify(const sources::EigenvalueStream& stream, const SetSpec& spec) {
  if (stream.exact && spec.tolerance > 0.0)
    throw ToleranceMisuse("classify: tolerance must be 0 on exact stream " + stream.source_id);

  const double k = spec.target.real();
  Membership out;
  out.limit = stream.limit;
  out.primes.reserve(stream.entries.size());
  out.member.reserve(stream.entries.size());
  for (const auto& e : stream.entries) {
    bool m = false;
    switch (spec.mode) {
      case SetMode::AbsEquals: m = abs_matches(e, std::abs(spec.target), spec.tolerance); break;
      case SetMode::AbsNotEquals: m = !abs_matches(e, std::abs(spec.target), spec.tolerance); break;
      case SetMode::ValueEquals: m = value_matches(e, spec.target, spec.tolerance); break;
      case SetMode::ValueNotEquals: m = !value_matches(e, spec.target, spec.tolerance); break;
      case SetMode::AbsAtMost: m = std::norm(e.normalized) <= k * k + kExactSquaredTol; break;
      case SetMode::AbsGreaterThan: m = std::norm(e.normalized) > k * k + kExactSquaredTol; break;
    }
    out.primes.push_back(e.prime);
    out.member.push_back(m ? 1 : 0);
  }
  return out;
}

double dirichlet_ratio(const Membership& membership, double s) {
  if (!(s > 1.0)) throw BadS("dirichlet_ratio: s must exceed 1");
  double sum = 0.0;
  for (std::size_t i = 0; i < membership.primes.size(); ++i)
    if (membership.member[i]) sum += std::pow(static_cast<double>(membership.primes[i]), -s);
  return sum / std::log(1.0 / (s - 1.0));
}

double dirichlet_tail_bound(std::int64_t limit, double s) {
  if (!(s > 1.0)) throw BadS("dirichlet_tail_bound: s must exceed 1");
  if (limit < 2) return 0.0;
  const double tail = std::pow(static_cast<double>(limit), 1.0 - s) / (s - 1.0);
  return tail / std::log(1.0 / (s - 1.0));
}

double relative_ratio(const Membership& membership, double s) {
  if (!(s > 1.0)) throw BadS("relative_ratio: s must exceed 1");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < membership.primes.size(); ++i) {
    const double w = std::pow(static_cast<double>(membership.primes[i]), -s);
    den += w;
    if (membership.member[i]) num += w;
  }
  return den == 0.0 ? 0.0 : num / den;
}

DensityEstimate estimate_density(const sources::EigenvalueStream& stream, const SetSpec& spec,
                                 const EstimateOptions& options) {
  const Membership mem = classify(stream, spec);
  DensityEstimate est;
  est.limit = stream.limit;
  est.stream_length = static_cast<std::int64_t>(mem.primes.size());
  est.member_count = mem.member_count();
  if (est.stream_length < options.min_stream)
    throw InsufficientData("estimate_density: stream shorter than configured minimum");
  if (est.member_count < options.min_members)
    throw InsufficientData("estimate_density: too few set members");

  est.natural = est.stream_length == 0
                    ? 0.0
                    : static_cast<double>(est.member_count) / static_cast<double>(est.stream_length);

  const double log_n =
      est.limit >= 2 ? std::log(static_cast<double>(est.limit)) : 0.0;
  for (double s : options.schedule) {
    if (!(s > 1.0) || s > 1.25)
      throw BadS("estimate_density: schedule points must lie in (1, 1.25]");
    RatioPoint pt;
    pt.s = s;
    pt.ratio = dirichlet_ratio(mem, s);
    pt.tail_bound = dirichlet_tail_bound(est.limit, s);
    pt.reliable = (s - 1.0) * log_n >= options.coupling;
    est.dirichlet.push_back(pt);
  }

  // least-squares linear fit in (s-1) over the last <= 3 reliable points
  std::vector<RatioPoint> reliable;
  for (const auto& pt : est.dirichlet)
    if (pt.reliable) reliable.push_back(pt);
  std::sort(reliable.begin(), reliable.end(),
            [](const RatioPoint& x, const RatioPoint& y) { return x.s > y.s; });
  while (reliable.size() > 3) reliable.erase(reliable.begin());

  if (reliable.empty()) {
    est.fit = est.natural;
  } else if (reliable.size() == 1) {
    est.fit = reliable.front().ratio;
  } else {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(reliable.size());
    for (const auto& pt : reliable) {
      const double x = pt.s - 1.0;
      sx += x;
      sy += pt.ratio;
      sxx += x * x;
      sxy += x * pt.ratio;
    }
    const double det = n * sxx - sx * sx;
    est.fit = det == 0.0 ? sy / n : (sy * sxx - sx * sxy) / det;
  }

  double spread = 0.0;
  for (const auto& a : reliable)
    for (const auto& b : reliable) spread = std::max(spread, std::abs(a.ratio - b.ratio));
  est.stabilized = reliable.size() >= 2 && spread < 0.02;
  est.extrapolated = est.stabilized ? est.fit : est.natural;
  return est;
}

DensityReport verify_bound(const DensityEstimate& estimate, const SetSpec& spec,
                           const BoundDescriptor& bound, const std::string& source_id,
                           double slack) {
  DensityReport r;
  r.source_id = source_id;
  r.set = spec;
  r.estimate = estimate;
  r.bound = bound;
  r.slack = slack;
  if (bound.direction == BoundDirection::LowerOnSet) {
    r.consistent = estimate.extrapolated >= bound.value - slack;
    r.gap = estimate.extrapolated - bound.value;
  } else {
    r.consistent = estimate.extrapolated <= bound.value + slack;
    r.gap = bound.value - estimate.extrapolated;
  }
  return r;
}

}  // namespace lacunarity::density
