#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lacunarity::satake {

enum class Cuspidality : std::uint8_t { No = 0, Yes = 1, Unknown = 2 };

/// Formal bookkeeping for one-dimensional (Hecke) characters of the base
/// field.  Three generators cover everything the calculus produces:
///   chi — the quadratic character attached to the quadratic extension E/F,
///   u   — the descent of a Galois-invariant ratio character (order two),
///   w   — a free infinite-order character (the norm-descent family).
/// The label is trivial iff all exponents vanish.
struct CharLabel {
  int chi = 0;      // exponent mod 2
  int u = 0;        // exponent mod 2
  long long w = 0;  // free exponent

  static CharLabel make(int chi_exp, int u_exp, long long w_exp) {
    return CharLabel{((chi_exp % 2) + 2) % 2, ((u_exp % 2) + 2) % 2, w_exp};
  }
  bool trivial() const { return chi == 0 && u == 0 && w == 0; }
  CharLabel inverse() const { return CharLabel{chi, u, -w}; }
  CharLabel times(const CharLabel& o) const {
    return CharLabel{(chi + o.chi) & 1, (u + o.u) & 1, w + o.w};
  }
  std::string text() const;  // "1", "chi", "u*w^-2", ...
  auto operator<=>(const CharLabel&) const = default;
};

/// Formal character of the quadratic extension E written multiplicatively in
/// the inducing character: mu^a * (mu^tau)^b.  tau is the nontrivial element
/// of Gal(E/F).
struct QuadExtChar {
  long long a = 0;
  long long b = 0;

  QuadExtChar conj() const { return {b, a}; }  // tau action
  QuadExtChar inverse() const { return {-a, -b}; }
  QuadExtChar times(const QuadExtChar& o) const { return {a + o.a, b + o.b}; }
  bool trivial() const { return a == 0 && b == 0; }
  std::string text() const;  // "mu", "mu^2*mutau^-1", ...
  auto operator<=>(const QuadExtChar&) const = default;
};

enum class Kind {
  TrivialCharacter,
  HeckeCharacter,
  SymPower,
  AdjointLift,
  InducedCharacter,
  CuspidalTensor,  // non-inducible dihedral product, dimension 4
};

/// One isobaric summand.  Identity is by canonical label; the cuspidality
/// flag is metadata reconciled on merge, never part of the identity.
class Constituent {
 public:
  Constituent() = default;  // trivial character

  static Constituent one();
  static Constituent character(CharLabel chr, long long det_exp = 0);
  static Constituent det_power(long long j);
  static Constituent sym_power(int k, long long det_exp, CharLabel chr = {},
                               Cuspidality c = Cuspidality::Unknown);
  /// Ad(pi); canonically the same object as Sym2(pi)*det^-1.
  static Constituent adjoint(CharLabel twist = {},
                             Cuspidality c = Cuspidality::Yes);
  /// Sym4(pi)*det^-2 (the self-dual normalization of the fourth power lift).
  static Constituent a4_lift(Cuspidality c = Cuspidality::Yes);
  static Constituent induced(QuadExtChar theta, std::string ext = "E",
                             Cuspidality c = Cuspidality::Yes);
  static Constituent cuspidal_tensor(std::string ext1, QuadExtChar t1,
                                     std::string ext2, QuadExtChar t2);

  Kind kind() const;
  int dimension() const;
  Cuspidality cuspidality() const { return cusp_; }
  void set_cuspidality(Cuspidality c) { cusp_ = c; }

  Constituent dual() const;
  bool self_dual() const;

  bool is_gl2_sym() const { return form_ == Form::Gl2Sym; }
  bool is_character() const { return form_ == Form::Char; }
  bool is_induced() const { return form_ == Form::Induced; }
  int sym_degree() const { return sym_; }
  long long det_exponent() const { return det_; }
  const CharLabel& char_label() const { return chr_; }
  const QuadExtChar& induced_char() const { return theta_; }
  const std::string& extension() const { return ext_; }

  std::string text() const;

  /// Label comparison used for canonical ordering (descending dimension,
  /// then structural fields).  Excludes the cuspidality flag.
  std::strong_ordering label_order(const Constituent&) const;
  bool label_equal(const Constituent& o) const {
    return label_order(o) == std::strong_ordering::equal;
  }

 private:
  enum class Form : std::uint8_t { Gl2Sym = 0, Char = 1, Induced = 2, Tensor4 = 3 };

  Form form_ = Form::Char;
  int sym_ = 0;         // symmetric-power degree (Gl2Sym only)
  long long det_ = 0;   // det (central character) twist exponent
  CharLabel chr_{};     // extra character twist
  QuadExtChar theta_{};
  std::string ext_{};
  QuadExtChar theta2_{};
  std::string ext2_{};
  Cuspidality cusp_ = Cuspidality::Yes;
};

struct ConstituentLabelLess {
  bool operator()(const Constituent& x, const Constituent& y) const {
    return x.label_order(y) == std::strong_ordering::less;
  }
};

}  // namespace lacunarity::satake
