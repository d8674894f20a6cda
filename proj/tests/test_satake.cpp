#include <doctest.h>

#include <complex>
#include <random>

#include "lacunarity/errors.hpp"
#include "lacunarity/satake/decompose.hpp"
#include "lacunarity/satake/satake_class.hpp"

using namespace lacunarity;
using namespace lacunarity::satake;

namespace {

std::complex<double> unit(std::mt19937_64& rng) {
  const double t = 2.0 * 3.14159265358979323846 * (double(rng() >> 11) * 0x1.0p-53);
  return {std::cos(t), std::sin(t)};
}

NumericContext random_ctx(std::mt19937_64& rng) {
  NumericContext ctx;
  ctx.alpha = unit(rng);
  ctx.beta = unit(rng);
  ctx.chi = (rng() & 1) ? 1.0 : -1.0;
  ctx.u = (rng() & 1) ? 1.0 : -1.0;
  ctx.w = unit(rng);
  return ctx;
}

// random cuspidal-resolved rep for duality/pairing properties
IsobaricRep random_rep(std::mt19937_64& rng) {
  IsobaricRep r;
  const int n = 1 + int(rng() % 5);
  for (int i = 0; i < n; ++i) {
    const long long mult = 1 + long(rng() % 3);
    switch (rng() % 4) {
      case 0:
        r.add(Constituent::character(CharLabel::make(int(rng() % 2), int(rng() % 2),
                                                     int(rng() % 5) - 2)),
              mult);
        break;
      case 1:
        r.add(Constituent::sym_power(1 + int(rng() % 4), int(rng() % 5) - 2, CharLabel{},
                                     Cuspidality::Yes),
              mult);
        break;
      case 2:
        r.add(Constituent::induced({long(rng() % 5) - 2, long(rng() % 5) - 2}), mult);
        break;
      default:
        r.add(Constituent::adjoint(), mult);
        break;
    }
  }
  return r;
}

}  // namespace

TEST_CASE("constituent dimensions and kinds") {
  CHECK(Constituent::one().dimension() == 1);
  CHECK(Constituent::one().kind() == Kind::TrivialCharacter);
  CHECK(Constituent::det_power(3).kind() == Kind::HeckeCharacter);
  CHECK(Constituent::sym_power(4, -2).dimension() == 5);
  CHECK(Constituent::sym_power(1, 0).dimension() == 2);
  CHECK(Constituent::adjoint().dimension() == 3);
  CHECK(Constituent::adjoint().kind() == Kind::AdjointLift);
  // Ad(pi) and Sym2(pi)*det^-1 are one canonical object
  CHECK(Constituent::adjoint().label_equal(Constituent::sym_power(2, -1)));
  CHECK(Constituent::induced({1, -1}).dimension() == 2);
  CHECK(Constituent::cuspidal_tensor("E1", {1, 0}, "E2", {1, 0}).dimension() == 4);
}

TEST_CASE("duality: bookkeeping rules and involution") {
  // dual of Sym^k det^j is Sym^k det^(-j-k)
  const Constituent pi = Constituent::sym_power(1, 0, {}, Cuspidality::Yes);
  CHECK(pi.dual().label_equal(Constituent::sym_power(1, -1)));
  CHECK(Constituent::adjoint().self_dual());
  CHECK(Constituent::a4_lift().self_dual());
  CHECK(Constituent::one().self_dual());

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const IsobaricRep r = random_rep(rng);
    CHECK(r.dual().dual() == r);
    CHECK(r.dual().total_dimension() == r.total_dimension());
  }
}

TEST_CASE("dual trace is the conjugate trace on unitary classes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    NumericContext ctx = random_ctx(rng);
    for (int k = 1; k <= 4; ++k) {
      const Constituent c = Constituent::sym_power(k, int(rng() % 5) - 2);
      const auto t = satake_trace(constituent_class(c, ctx));
      const auto td = satake_trace(constituent_class(c.dual(), ctx));
      CHECK(std::abs(td - std::conj(t)) < 1e-9);
    }
  }
}

TEST_CASE("clebsch_gordan: shape and dimension") {
  // (1,1) -> Sym2 (+) det
  const IsobaricRep r11 = clebsch_gordan(1, 1);
  CHECK(r11.distinct_count() == 2);
  CHECK(r11.multiplicity(Constituent::sym_power(2, 0)) == 1);
  CHECK(r11.multiplicity(Constituent::det_power(1)) == 1);

  // (a,0) -> Sym^a
  for (int a = 0; a <= 6; ++a) {
    const IsobaricRep r = clebsch_gordan(a, 0);
    CHECK(r.distinct_count() == 1);
    CHECK(r.total_dimension() == a + 1);
  }

  // (4,4): Sym8 (+) Sym6 det (+) Sym4 det^2 (+) Sym2 det^3 (+) det^4, dim 25
  const IsobaricRep r44 = clebsch_gordan(4, 4);
  CHECK(r44.distinct_count() == 5);
  CHECK(r44.total_dimension() == 25);
  CHECK(r44.multiplicity(Constituent::sym_power(8, 0)) == 1);
  CHECK(r44.multiplicity(Constituent::det_power(4)) == 1);

  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      CHECK(clebsch_gordan(a, b).total_dimension() == (a + 1) * (b + 1));
}

TEST_CASE("clebsch_gordan numeric trace oracle") {
  std::mt19937_64 rng(11);
  double max_err = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    NumericContext ctx = random_ctx(rng);
    const SatakeClass base{{ctx.alpha, ctx.beta}, 2};
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        const auto lhs =
            satake_trace(sym_power_class(base, a)) * satake_trace(sym_power_class(base, b));
        const auto rhs = satake_trace(isobaric_class(clebsch_gordan(a, b), ctx));
        max_err = std::max(max_err, std::abs(lhs - rhs));
      }
  }
  CHECK(max_err < 1e-10);
}

TEST_CASE("tensor_power_decompose: non-solvable shapes") {
  const GL2Type t = GL2Type::non_solvable();

  // pi (x) pibar = Ad(pi) (+) 1
  const IsobaricRep d11 = tensor_power_decompose(t, 1, 1);
  CHECK(d11.distinct_count() == 2);
  CHECK(d11.multiplicity(Constituent::adjoint()) == 1);
  CHECK(d11.multiplicity(Constituent::one()) == 1);
  CHECK(d11.text() == "Ad(pi) (+) 1");

  // (2,2): Sym4 det^-2 (+) 3 Ad (+) 2*1 — the paired form behind order 14
  const IsobaricRep d22 = tensor_power_decompose(t, 2, 2);
  CHECK(d22.multiplicity(Constituent::a4_lift()) == 1);
  CHECK(d22.multiplicity(Constituent::adjoint()) == 3);
  CHECK(d22.multiplicity(Constituent::one()) == 2);

  // dimension conservation across the full supported range
  for (int k = 0; k <= 8; ++k)
    for (int l = 0; l <= 8 - k; ++l) {
      if (k + l < 1) continue;
      CHECK(tensor_power_decompose(t, k, l).total_dimension() == (1LL << (k + l)));
    }

  CHECK_THROWS_AS(tensor_power_decompose(t, 5, 4), RangeError);
  CHECK_THROWS_AS(tensor_power_decompose(GL2Type::tetrahedral(), 1, 1), UnsupportedType);
  CHECK_THROWS_AS(tensor_power_decompose(GL2Type::octahedral(), 2, 2), UnsupportedType);
}

TEST_CASE("tensor power pole orders: 1, 2, 5, 14") {
  const GL2Type t = GL2Type::non_solvable();
  const long long expected[] = {1, 2, 5, 14};
  for (int k = 1; k <= 4; ++k) {
    CHECK(tensor_power_pole_order(t, k, k) == expected[k - 1]);
    // the trivial multiplicity of the full decomposition agrees
    CHECK(tensor_power_decompose(t, k, k).multiplicity(Constituent::one()) ==
          expected[k - 1]);
  }
  // trivial multiplicity route matches the paired route everywhere
  for (int k = 1; k <= 7; ++k)
    for (int l = 1; l <= 8 - k; ++l)
      CHECK(tensor_power_decompose(t, k, l).multiplicity(Constituent::one()) ==
            tensor_power_pole_order(t, k, l));
}

TEST_CASE("pole_order: pairings, errors, properties") {
  const GL2Type t = GL2Type::non_solvable();

  // simple pole of L(s, pi x pibar)
  const IsobaricRep pi = tensor_power_decompose(t, 1, 0);
  const IsobaricRep pibar = tensor_power_decompose(t, 0, 1);
  CHECK(pole_order(pi, pibar) == 1);

  // Ad (+) 1 against itself: order two
  const IsobaricRep ad1 = tensor_power_decompose(t, 1, 1);
  CHECK(pole_order(ad1, ad1) == 2);
  CHECK(self_pairing_order(ad1) == 2);

  // A4 (+) Ad (+) 1 against itself: order three
  const IsobaricRep gl3 = gl3_adjoint_tensor(t);
  CHECK(pole_order(gl3, gl3) == 3);

  // unresolved Sym^6 inside (3,3) blocks pairing
  const IsobaricRep d33 = tensor_power_decompose(t, 3, 3);
  CHECK_THROWS_AS(pole_order(d33, IsobaricRep::one()), UnresolvedConstituent);

  // resolved non-cuspidal constituents must be decomposed first
  IsobaricRep bad;
  bad.add(Constituent::sym_power(2, -1, {}, Cuspidality::No));
  CHECK_THROWS_AS(pole_order(bad, bad), NonCuspidalConstituent);

  // pole_order(A, dual(A)) >= #distinct classes, equality iff all mult 1
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const IsobaricRep r = random_rep(rng);
    const long long sp = self_pairing_order(r);
    CHECK(sp >= static_cast<long long>(r.distinct_count()));
    bool all_one = true;
    for (const auto& [c, m] : r.parts()) {
      (void)c;
      if (m != 1) all_one = false;
    }
    CHECK((sp == static_cast<long long>(r.distinct_count())) == all_one);
    // symmetry up to duality
    const IsobaricRep r2 = random_rep(rng);
    CHECK(pole_order(r, r2) == pole_order(r2.dual(), r.dual()));
  }
}

TEST_CASE("dihedral tensor: the three ratio cases") {
  // not Galois-invariant: 1 (+) chi (+) I(ratio), one constituent of dim 2
  const IsobaricRep generic = dihedral_pi_pibar(DihedralRelation::Generic);
  CHECK(generic.distinct_count() == 3);
  CHECK(generic.total_dimension() == 4);
  {
    int dim2 = 0;
    for (const auto& [c, m] : generic.parts())
      if (c.dimension() == 2) dim2 += int(m);
    CHECK(dim2 == 1);
  }
  CHECK(self_pairing_order(generic) == 3);

  // invariant: four one-dimensional constituents
  const IsobaricRep inv = dihedral_pi_pibar(DihedralRelation::RatioOrderTwo);
  CHECK(inv.distinct_count() == 4);
  CHECK(inv.total_dimension() == 4);
  for (const auto& [c, m] : inv.parts()) {
    CHECK(c.dimension() == 1);
    CHECK(m == 1);
  }
  CHECK(self_pairing_order(inv) == 4);

  // trivial ratio: 1 (+) chi (+) 1 (+) chi merges to (1:2, chi:2)
  const IsobaricRep triv = dihedral_pi_pibar(DihedralRelation::RatioTrivial);
  CHECK(triv.distinct_count() == 2);
  CHECK(triv.multiplicity(Constituent::one()) == 2);
  CHECK(triv.multiplicity(Constituent::character(CharLabel::make(1, 0, 0))) == 2);

  // different quadratic extensions: a single cuspidal constituent of dim 4
  const IsobaricRep cusp =
      dihedral_tensor({1, 0}, {1, 0}, DihedralRelation::Generic, "E1", "E2");
  CHECK(cusp.distinct_count() == 1);
  CHECK(cusp.total_dimension() == 4);
  CHECK(self_pairing_order(cusp) == 1);
}

TEST_CASE("dihedral tensor powers") {
  for (DihedralRelation rel :
       {DihedralRelation::Generic, DihedralRelation::RatioOrderTwo}) {
    const GL2Type t = GL2Type::dihedral(rel);
    for (int k = 0; k <= 4; ++k)
      for (int l = 0; l <= 4; ++l) {
        if (k + l < 1) continue;
        CHECK(tensor_power_decompose(t, k, l).total_dimension() == (1LL << (k + l)));
      }
  }
  // m for Theorem thm-c at n = 2: self-pairing of pi (x) pibar
  CHECK(tensor_power_pole_order(GL2Type::dihedral(true), 2, 2) == 4);
  CHECK(tensor_power_pole_order(GL2Type::dihedral(false), 2, 2) == 3);
  CHECK(tensor_power_pole_order(GL2Type::dihedral(true), 1, 1) == 1);
  // the trivial-multiplicity route agrees with the paired-halves route
  for (bool inv : {false, true}) {
    const GL2Type t = GL2Type::dihedral(inv);
    for (int k = 1; k <= 4; ++k)
      for (int l = 1; l <= 4; ++l)
        CHECK(tensor_power_decompose(t, k, l).multiplicity(Constituent::one()) ==
              tensor_power_pole_order(t, k, l));
  }
  // tensor_power_decompose(1,1) agrees with the dedicated dihedral op
  CHECK(tensor_power_decompose(GL2Type::dihedral(true), 1, 1) ==
        dihedral_pi_pibar(DihedralRelation::RatioOrderTwo));
  CHECK(tensor_power_decompose(GL2Type::dihedral(false), 1, 1) ==
        dihedral_pi_pibar(DihedralRelation::Generic));
}

TEST_CASE("gl3 adjoint tensor") {
  const IsobaricRep r = gl3_adjoint_tensor(GL2Type::non_solvable());
  CHECK(r.total_dimension() == 9);
  CHECK(r.distinct_count() == 3);
  int dims[3] = {0, 0, 0};
  int i = 0;
  for (const auto& [c, m] : r.parts()) {
    (void)m;
    dims[i++] = c.dimension();
  }
  CHECK(dims[0] == 5);
  CHECK(dims[1] == 3);
  CHECK(dims[2] == 1);
  CHECK(self_pairing_order(r) == 3);
  CHECK(r.text() == "Sym4(pi)*det^-2 (+) Ad(pi) (+) 1");
  CHECK_THROWS_AS(gl3_adjoint_tensor(GL2Type::dihedral(false)), UnsupportedType);
  CHECK_THROWS_AS(gl3_adjoint_tensor(GL2Type::tetrahedral()), UnsupportedType);
}

TEST_CASE("gl3 adjoint trace identity |tr Pi|^2 = tr(5) + tr(3) + 1") {
  std::mt19937_64 rng(31);
  double max_err = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    NumericContext ctx = random_ctx(rng);
    const auto tr = satake_trace(gl3_adjoint_class(ctx));
    const auto lhs = tr * std::conj(tr);
    const auto rhs =
        satake_trace(isobaric_class(gl3_adjoint_tensor(GL2Type::non_solvable()), ctx));
    max_err = std::max(max_err, std::abs(lhs - rhs));
  }
  CHECK(max_err < 1e-10);
}

TEST_CASE("satake classes") {
  const SatakeClass ones{{1.0, 1.0}, 2};
  CHECK(std::abs(satake_trace(ones) - 2.0) < 1e-15);

  const double theta = 0.7;
  const SatakeClass conj_pair{{{std::cos(theta), std::sin(theta)},
                               {std::cos(theta), -std::sin(theta)}},
                              5};
  CHECK(std::abs(satake_trace(conj_pair) - 2.0 * std::cos(theta)) < 1e-15);
  CHECK(conj_pair.ramanujan());

  // trace multiplicativity and |alpha+beta|^2
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    SatakeClass x{{unit(rng), unit(rng), unit(rng)}, 7};
    SatakeClass y{{unit(rng), unit(rng)}, 7};
    CHECK(std::abs(satake_trace(satake_tensor(x, y)) - satake_trace(x) * satake_trace(y)) <
          1e-12);
    SatakeClass xbar{{std::conj(y.params[0]), std::conj(y.params[1])}, 7};
    const auto t = satake_trace(satake_tensor(y, xbar));
    CHECK(std::abs(t - std::norm(y.params[0] + y.params[1])) < 1e-12);
  }

  // identity tensor
  SatakeClass x{{unit(rng), unit(rng)}, 11};
  SatakeClass one{{1.0}, 11};
  const SatakeClass xi = satake_tensor(x, one);
  CHECK(xi.params == x.params);

  SatakeClass other{{1.0}, 13};
  CHECK_THROWS_AS(satake_tensor(x, other), PlaceMismatch);
}

TEST_CASE("text and JSON round trips") {
  const GL2Type t = GL2Type::non_solvable();
  std::vector<IsobaricRep> samples = {
      tensor_power_decompose(t, 1, 1),
      tensor_power_decompose(t, 2, 2),
      tensor_power_decompose(t, 4, 4),
      tensor_power_decompose(t, 3, 1),
      gl3_adjoint_tensor(t),
      dihedral_pi_pibar(DihedralRelation::Generic),
      dihedral_pi_pibar(DihedralRelation::RatioOrderTwo),
      tensor_power_decompose(GL2Type::dihedral(true), 2, 2),
      dihedral_tensor({1, 0}, {1, 0}, DihedralRelation::Generic, "E1", "E2"),
  };
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) samples.push_back(random_rep(rng));

  for (const auto& r : samples) {
    CHECK(IsobaricRep::parse(r.text()) == r);
    CHECK(IsobaricRep::from_json(r.json()) == r);
  }
  CHECK_THROWS_AS(IsobaricRep::parse("Sym(pi"), ParseError);
  CHECK_THROWS_AS(IsobaricRep::parse("frob^2"), ParseError);
}
