#pragma once

#include <map>
#include <string>

#include "lacunarity/satake/constituent.hpp"

namespace lacunarity::satake {

/// Canonical multiset of cuspidal constituents with positive multiplicities.
/// Equal labels are merged on insertion and cuspidality flags reconciled
/// (a resolved flag wins over Unknown; a Yes/No conflict is a logic error).
class IsobaricRep {
 public:
  using Parts = std::map<Constituent, long long, ConstituentLabelLess>;

  IsobaricRep() = default;
  static IsobaricRep one();
  static IsobaricRep single(const Constituent& c, long long mult = 1);

  void add(const Constituent& c, long long mult = 1);
  void add(const IsobaricRep& other, long long mult = 1);

  bool empty() const { return parts_.empty(); }
  const Parts& parts() const { return parts_; }
  long long multiplicity(const Constituent& c) const;
  long long total_dimension() const;
  std::size_t distinct_count() const { return parts_.size(); }

  IsobaricRep dual() const;

  bool operator==(const IsobaricRep& o) const;

  /// Canonical text form, e.g. "Sym4(pi)*det^-2 (+) Ad(pi) (+) 1".
  /// Multiplicities >= 2 render as a prefix: "3 x Ad(pi)".
  std::string text() const;
  static IsobaricRep parse(const std::string& s);  // throws ParseError

  /// Structured JSON form {"constituents":[{kind,k,det,char,mult,cuspidal}]}.
  std::string json() const;
  static IsobaricRep from_json(const std::string& s);  // throws ParseError

 private:
  Parts parts_;
};

/// Order of the pole at s=1 of the Rankin–Selberg L-function L(s, A x B):
/// sum of a_i * b_j over pairs with sigma_i isomorphic to dual(tau_j).
/// Requires every constituent on both sides to carry a resolved cuspidality
/// flag (throws UnresolvedConstituent) and to be cuspidal (throws
/// NonCuspidalConstituent otherwise: decompose before pairing).
long long pole_order(const IsobaricRep& A, const IsobaricRep& B);

/// pole_order(A, dual(A)) — the self-pairing order of a decomposition.
long long self_pairing_order(const IsobaricRep& A);

}  // namespace lacunarity::satake
