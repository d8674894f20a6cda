#pragma once

#include <string>

#include "lacunarity/satake/isobaric.hpp"

namespace lacunarity::satake {

/// Type trichotomy for a cuspidal GL(2) representation.  The dihedral
/// variant records whether the ratio character nu/nu^tau is Gal(E/F)
/// invariant; RatioTrivial additionally declares nu = nu^tau.
enum class DihedralRelation { Generic, RatioOrderTwo, RatioTrivial };

struct GL2Type {
  enum class Kind { NonSolvablePolyhedral, Tetrahedral, Octahedral, Dihedral };

  Kind kind = Kind::NonSolvablePolyhedral;
  DihedralRelation relation = DihedralRelation::Generic;  // Dihedral only

  static GL2Type non_solvable() { return {Kind::NonSolvablePolyhedral, DihedralRelation::Generic}; }
  static GL2Type tetrahedral() { return {Kind::Tetrahedral, DihedralRelation::Generic}; }
  static GL2Type octahedral() { return {Kind::Octahedral, DihedralRelation::Generic}; }
  static GL2Type dihedral(bool ratio_invariant) {
    return {Kind::Dihedral,
            ratio_invariant ? DihedralRelation::RatioOrderTwo : DihedralRelation::Generic};
  }
  static GL2Type dihedral(DihedralRelation rel) { return {Kind::Dihedral, rel}; }

  bool is_dihedral() const { return kind == Kind::Dihedral; }
  bool ratio_invariant() const { return relation != DihedralRelation::Generic; }
};

/// Clebsch–Gordan decomposition over formal SymPower/det symbols:
/// Sym^a (x) Sym^b = (+)_{i=0..min(a,b)} Sym^{a+b-2i} * det^i.
/// Total dimension (a+1)(b+1).
IsobaricRep clebsch_gordan(int a, int b);

/// Isobaric decomposition of pi^{(x)k} (x) pibar^{(x)l} (dimension 2^(k+l)).
/// For the non-solvable type the constituents are Sym powers with det
/// twists; cuspidality is resolved for Sym degrees <= 4 (the known lifts)
/// and left Unknown above.  For the dihedral type the product is reduced
/// recursively through automorphic induction instead.  Tetrahedral and
/// octahedral types are rejected (UnsupportedType); k+l must lie in [1, 8]
/// (RangeError otherwise).
IsobaricRep tensor_power_decompose(const GL2Type& type, int k, int l);

/// Order of the pole at s=1 of L(s, pi^{x k} x pibar^{x l}), computed as
/// pole_order over a balanced split into two tensor_power_decompose halves
/// (each half stays within the Sym^4 cuspidality range).  Requires k, l >= 1
/// and k+l <= 8.
long long tensor_power_pole_order(const GL2Type& type, int k, int l);

/// I(mu) (x) I(nu) for characters mu, nu of quadratic extensions ext1, ext2.
/// Same extension: I(mu*nu) (+) I(mu*nu^tau) with Galois-invariant pieces
/// split into characters of the base field.  Different extensions: a single
/// cuspidal 4-dimensional constituent.
IsobaricRep dihedral_tensor(QuadExtChar mu, QuadExtChar nu, DihedralRelation rel,
                            const std::string& ext1 = "E",
                            const std::string& ext2 = "E");
IsobaricRep dihedral_tensor(QuadExtChar mu, QuadExtChar nu, bool ratio_invariant);

/// pi (x) pibar for pi = I_E^F(mu):
///   Generic:       1 (+) chi (+) I(mu/mu^tau)
///   RatioOrderTwo: 1 (+) chi (+) u (+) u*chi
///   RatioTrivial:  1 (+) chi (+) 1 (+) chi  ->  canonical (1:2, chi:2)
IsobaricRep dihedral_pi_pibar(DihedralRelation rel);

/// Pi (x) Pibar for Pi the twisted adjoint lift of a GL(2) representation
/// that is not of solvable polyhedral type: Sym4(pi)*det^-2 (+) Ad(pi) (+) 1
/// (dimensions 5+3+1).  Throws UnsupportedType for other base types.
IsobaricRep gl3_adjoint_tensor(const GL2Type& base);

constexpr int kMaxTensorExponent = 8;

}  // namespace lacunarity::satake
