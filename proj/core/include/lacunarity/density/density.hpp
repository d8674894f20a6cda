#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lacunarity/sources/stream.hpp"

namespace lacunarity::density {

enum class SetMode {
  AbsEquals,      // |a_v| = gamma  (the lacunarity set)
  AbsNotEquals,   // |a_v| != gamma (S_gamma)
  ValueEquals,    // a_v = alpha
  ValueNotEquals, // a_v != alpha   (S(pi, alpha))
  AbsAtMost,      // |a_v| <= k
  AbsGreaterThan, // |a_v| > k
};

/// Membership test applied per prime.  `tolerance` is reserved for
/// non-exact sources and must stay 0 on exact streams (ToleranceMisuse).
/// Exact streams use exact-zero flags for gamma = 0 questions and a fixed
/// 1e-9 comparison on squared absolute values elsewhere.
struct SetSpec {
  SetMode mode = SetMode::AbsNotEquals;
  std::complex<double> target;
  double tolerance = 0.0;

  std::string text() const;
};

struct Membership {
  std::vector<std::int64_t> primes;
  std::vector<char> member;
  std::int64_t limit = 0;  // prime bound of the underlying stream

  std::int64_t member_count() const;
};

Membership classify(const sources::EigenvalueStream& stream, const SetSpec& spec);

/// Truncated lower-Dirichlet-density ratio at s > 1:
///   sum_{p in S, p <= N} p^{-s} / log(1/(s-1)).
/// Throws BadS for s <= 1.
double dirichlet_ratio(const Membership& membership, double s);

/// Upper bound on the ratio mass lost to truncation at N:
///   sum_{p > N} p^{-s} < N^{1-s}/(s-1), divided by log(1/(s-1)).
double dirichlet_tail_bound(std::int64_t limit, double s);

/// Self-normalized variant: sum_{p in S} p^{-s} / sum_{p <= N} p^{-s}.
double relative_ratio(const Membership& membership, double s);

struct RatioPoint {
  double s = 0.0;
  double ratio = 0.0;
  double tail_bound = 0.0;
  bool reliable = false;  // (s-1) log N >= coupling
};

struct DensityEstimate {
  double natural = 0.0;  // member count / stream length
  std::vector<RatioPoint> dirichlet;
  /// Density point estimate: the linear fit in (s-1) over the reliable
  /// ratios when those have stabilized (spread < 0.02 across two or more
  /// points), the natural density otherwise.  Truncated log-normalized
  /// ratios underestimate at finite N, so an unstabilized fit is reported
  /// in `fit` but never used as the estimate.
  double extrapolated = 0.0;
  double fit = 0.0;          // raw fit/ratio value over the reliable points
  bool stabilized = false;
  std::int64_t limit = 0;
  std::int64_t member_count = 0;
  std::int64_t stream_length = 0;
};

struct EstimateOptions {
  std::vector<double> schedule{1.2, 1.1, 1.05, 1.02, 1.01};
  double coupling = 2.0;        // require (s-1) log N >= coupling
  std::int64_t min_stream = 50;
  std::int64_t min_members = 0;
};

/// Natural density plus the Dirichlet-ratio schedule with the truncation
/// coupling rule applied; the extrapolated value is a least-squares linear
/// fit in (s-1) over the last (up to three) reliable points, falling back to
/// the natural density when none survive.  Throws InsufficientData below the
/// configured minima and BadS for a schedule point outside (1, 1.25].
DensityEstimate estimate_density(const sources::EigenvalueStream& stream, const SetSpec& spec,
                                 const EstimateOptions& options = {});

enum class BoundDirection { LowerOnSet, UpperOnSet };

struct BoundDescriptor {
  std::string name;
  double value = 0.0;
  bool vacuous = false;
  BoundDirection direction = BoundDirection::LowerOnSet;
};

/// Bound-verification verdict.  `gap` is the slack remaining toward the
/// bound (estimate - value for lower bounds, value - estimate for upper
/// bounds); a sharp instance has gap near 0.
struct DensityReport {
  std::string source_id;
  SetSpec set;
  DensityEstimate estimate;
  BoundDescriptor bound;
  double slack = 0.05;
  bool consistent = false;
  double gap = 0.0;
};

DensityReport verify_bound(const DensityEstimate& estimate, const SetSpec& spec,
                           const BoundDescriptor& bound, const std::string& source_id,
                           double slack = 0.05);

}  // namespace lacunarity::density
