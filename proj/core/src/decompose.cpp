#include "lacunarity/satake/decompose.hpp"

#include <array>
#include <cmath>

#include "lacunarity/errors.hpp"

namespace lacunarity::satake {

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// multiplicity of Sym^{n-2i} * det^i inside the n-th tensor power of the
// standard 2-dimensional representation (ballot numbers)
long long tensor_power_mult(int n, int i) { return binom(n, i) - binom(n, i - 1); }

Cuspidality sym_cuspidality(const GL2Type& type, int k) {
  if (type.kind != GL2Type::Kind::NonSolvablePolyhedral)
    throw UnsupportedType("Sym-power cuspidality is only resolved for the non-solvable type");
  if (k == 0) return Cuspidality::Yes;  // character
  // Sym^1 = pi itself; Sym^2, Sym^3, Sym^4 are the known cuspidal lifts.
  return k <= 4 ? Cuspidality::Yes : Cuspidality::Unknown;
}

void require_supported(const GL2Type& type) {
  if (type.kind == GL2Type::Kind::Tetrahedral || type.kind == GL2Type::Kind::Octahedral)
    throw UnsupportedType(
        "tetrahedral/octahedral tensor powers have no supported decomposition");
}

// ---- dihedral formal calculus ------------------------------------------

// canonical representative of an E-character modulo the declared relation
QuadExtChar reduce(QuadExtChar t, DihedralRelation rel) {
  switch (rel) {
    case DihedralRelation::Generic:
      return t;
    case DihedralRelation::RatioOrderTwo: {
      // (mu/mu^tau)^2 = 1, i.e. (2,-2) ~ (0,0): bring a-b into {-1,0,1,2}
      long long d = t.a - t.b;
      long long dmod = ((d % 4) + 4) % 4;          // 0..3
      long long target = (dmod == 3) ? -1 : dmod;  // -1,0,1,2
      long long shift = (d - target) / 4;          // multiples of (2,-2)
      return {t.a - 2 * shift, t.b + 2 * shift};
    }
    case DihedralRelation::RatioTrivial:
      // mu = mu^tau: every character descends; collapse onto one axis
      return {t.a + t.b, 0};
  }
  return t;
}

bool galois_invariant(const QuadExtChar& t, DihedralRelation rel) {
  switch (rel) {
    case DihedralRelation::Generic: return t.a == t.b;
    case DihedralRelation::RatioOrderTwo: return ((t.a - t.b) % 2) == 0;
    case DihedralRelation::RatioTrivial: return true;
  }
  return false;
}

// split I(theta) for Galois-invariant theta into the two descents
std::pair<CharLabel, CharLabel> split_invariant(const QuadExtChar& t, DihedralRelation rel) {
  long long w_exp = 0;
  int u_exp = 0;
  switch (rel) {
    case DihedralRelation::Generic:
      w_exp = t.a;  // theta = (mu mu^tau)^a
      break;
    case DihedralRelation::RatioOrderTwo:
      // theta = (mu mu^tau)^m (mu/mu^tau)^d with m=(a+b)/2, d=(a-b)/2
      w_exp = (t.a + t.b) / 2;
      u_exp = static_cast<int>(((t.a - t.b) / 2) & 1);
      break;
    case DihedralRelation::RatioTrivial:
      w_exp = t.a + t.b;  // reduce() already collapsed, but stay safe
      break;
  }
  CharLabel base = CharLabel::make(0, u_exp, w_exp);
  return {base, base.times(CharLabel::make(1, 0, 0))};
}

// pull a base-field character back to E: chi_E = 1, u_E = mu/mu^tau, and
// w_E = mu*mu^tau (under the trivial-ratio relation w descends mu itself)
QuadExtChar pullback(const CharLabel& c, DihedralRelation rel) {
  if (rel == DihedralRelation::RatioTrivial) return QuadExtChar{c.w, 0};
  return QuadExtChar{c.w + c.u, c.w - c.u};
}

void add_induced_or_split(IsobaricRep& out, QuadExtChar theta, DihedralRelation rel,
                          long long mult, const std::string& ext) {
  theta = reduce(theta, rel);
  if (galois_invariant(theta, rel)) {
    auto [c1, c2] = split_invariant(theta, rel);
    out.add(Constituent::character(c1), mult);
    out.add(Constituent::character(c2), mult);
  } else {
    out.add(Constituent::induced(theta, ext, Cuspidality::Yes), mult);
  }
}

// state (x) I(gen) over one quadratic extension
IsobaricRep dihedral_tensor_step(const IsobaricRep& state, QuadExtChar gen,
                                 DihedralRelation rel, const std::string& ext) {
  IsobaricRep next;
  for (const auto& [c, m] : state.parts()) {
    if (c.is_character()) {
      if (c.det_exponent() != 0)
        throw Error("dihedral calculus: unexpected det twist on a character");
      add_induced_or_split(next, pullback(c.char_label(), rel).times(gen), rel, m, ext);
    } else if (c.is_induced()) {
      // I(theta) (x) I(gen) = I(theta*gen) (+) I(theta*gen^tau)
      add_induced_or_split(next, c.induced_char().times(gen), rel, m, ext);
      add_induced_or_split(next, c.induced_char().times(gen.conj()), rel, m, ext);
    } else {
      throw Error("dihedral calculus: unexpected constituent " + c.text());
    }
  }
  return next;
}

IsobaricRep dihedral_power_decompose(const GL2Type& type, int k, int l) {
  const DihedralRelation rel = type.relation;
  const std::string ext = "E";
  int pi_left = k;
  int pibar_left = l;
  IsobaricRep state;
  add_induced_or_split(state, pi_left > 0 ? QuadExtChar{1, 0} : QuadExtChar{-1, 0}, rel, 1,
                       ext);
  if (pi_left > 0) --pi_left; else --pibar_left;
  for (; pi_left > 0; --pi_left) state = dihedral_tensor_step(state, {1, 0}, rel, ext);
  for (; pibar_left > 0; --pibar_left) state = dihedral_tensor_step(state, {-1, 0}, rel, ext);
  return state;
}

}  // namespace

IsobaricRep clebsch_gordan(int a, int b) {
  if (a < 0 || b < 0) throw RangeError("clebsch_gordan: degrees must be non-negative");
  IsobaricRep r;
  for (int i = 0; i <= std::min(a, b); ++i)
    r.add(Constituent::sym_power(a + b - 2 * i, i), 1);
  return r;
}

IsobaricRep tensor_power_decompose(const GL2Type& type, int k, int l) {
  require_supported(type);
  if (k < 0 || l < 0 || k + l < 1 || k + l > kMaxTensorExponent)
    throw RangeError("tensor_power_decompose: k+l must lie in [1, 8]");
  if (type.is_dihedral()) return dihedral_power_decompose(type, k, l);

  // pi^{(x)k} (x) pibar^{(x)l} = V^{(x)(k+l)} * det^-l
  const int n = k + l;
  IsobaricRep r;
  for (int i = 0; i <= n / 2; ++i) {
    int sym = n - 2 * i;
    long long det = static_cast<long long>(i) - l;
    r.add(Constituent::sym_power(sym, det, CharLabel{}, sym_cuspidality(type, sym)),
          tensor_power_mult(n, i));
  }
  return r;
}

long long tensor_power_pole_order(const GL2Type& type, int k, int l) {
  require_supported(type);
  if (k < 1 || l < 1) throw RangeError("tensor_power_pole_order: k, l must be >= 1");
  if (k + l > kMaxTensorExponent)
    throw RangeError("tensor_power_pole_order: k+l must be <= 8");
  // Balanced split keeps each half inside the resolved Sym^4 range.
  const int half = (k + l + 1) / 2;
  const int ka = std::min(k, half);
  const int la = half - ka;
  const IsobaricRep left = tensor_power_decompose(type, ka, la);
  const IsobaricRep right = tensor_power_decompose(type, k - ka, l - la);
  return pole_order(left, right);
}

IsobaricRep dihedral_tensor(QuadExtChar mu, QuadExtChar nu, DihedralRelation rel,
                            const std::string& ext1, const std::string& ext2) {
  if (ext1 != ext2) {
    // not induced from the same quadratic extension: the product is cuspidal
    return IsobaricRep::single(Constituent::cuspidal_tensor(ext1, mu, ext2, nu));
  }
  IsobaricRep out;
  add_induced_or_split(out, mu.times(nu), rel, 1, ext1);
  add_induced_or_split(out, mu.times(nu.conj()), rel, 1, ext1);
  return out;
}

IsobaricRep dihedral_tensor(QuadExtChar mu, QuadExtChar nu, bool ratio_invariant) {
  return dihedral_tensor(mu, nu,
                         ratio_invariant ? DihedralRelation::RatioOrderTwo
                                         : DihedralRelation::Generic);
}

IsobaricRep dihedral_pi_pibar(DihedralRelation rel) {
  return dihedral_tensor(QuadExtChar{1, 0}, QuadExtChar{-1, 0}, rel);
}

IsobaricRep gl3_adjoint_tensor(const GL2Type& base) {
  if (base.kind != GL2Type::Kind::NonSolvablePolyhedral)
    throw UnsupportedType(
        "gl3_adjoint_tensor: base representation must not be of solvable polyhedral type");
  IsobaricRep r;
  r.add(Constituent::a4_lift(Cuspidality::Yes));
  r.add(Constituent::adjoint(CharLabel{}, Cuspidality::Yes));
  r.add(Constituent::one());
  return r;
}

}  // namespace lacunarity::satake
