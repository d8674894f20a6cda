#include "lacunarity/satake/constituent.hpp"

#include <sstream>
#include <tuple>
#include <utility>

#include "lacunarity/errors.hpp"

namespace lacunarity::satake {

namespace {

void append_power(std::ostream& os, const char* name, long long e, bool& first) {
  if (e == 0) return;
  if (!first) os << "*";
  os << name;
  if (e != 1) os << "^" << e;
  first = false;
}

// canonical representative of an induced character under I(theta) ~ I(theta^tau)
QuadExtChar tau_min(const QuadExtChar& t) {
  QuadExtChar c = t.conj();
  return (c < t) ? c : t;
}

}  // namespace

std::string CharLabel::text() const {
  if (trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  append_power(os, "chi", chi, first);
  append_power(os, "u", u, first);
  append_power(os, "w", w, first);
  return os.str();
}

std::string QuadExtChar::text() const {
  if (trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  append_power(os, "mu", a, first);
  append_power(os, "mutau", b, first);
  return os.str();
}

Constituent Constituent::one() {
  Constituent c;
  c.form_ = Form::Char;
  c.cusp_ = Cuspidality::Yes;
  return c;
}

Constituent Constituent::character(CharLabel chr, long long det_exp) {
  Constituent c;
  c.form_ = Form::Char;
  c.chr_ = chr;
  c.det_ = det_exp;
  c.cusp_ = Cuspidality::Yes;
  return c;
}

Constituent Constituent::det_power(long long j) { return character(CharLabel{}, j); }

Constituent Constituent::sym_power(int k, long long det_exp, CharLabel chr, Cuspidality cusp) {
  if (k < 0) throw RangeError("sym_power: negative degree");
  if (k == 0) return character(chr, det_exp);
  Constituent c;
  c.form_ = Form::Gl2Sym;
  c.sym_ = k;
  c.det_ = det_exp;
  c.chr_ = chr;
  c.cusp_ = cusp;
  return c;
}

Constituent Constituent::adjoint(CharLabel twist, Cuspidality cusp) {
  return sym_power(2, -1, twist, cusp);
}

Constituent Constituent::a4_lift(Cuspidality cusp) {
  return sym_power(4, -2, CharLabel{}, cusp);
}

Constituent Constituent::induced(QuadExtChar theta, std::string ext, Cuspidality cusp) {
  Constituent c;
  c.form_ = Form::Induced;
  c.theta_ = tau_min(theta);
  c.ext_ = std::move(ext);
  c.cusp_ = cusp;
  return c;
}

Constituent Constituent::cuspidal_tensor(std::string ext1, QuadExtChar t1,
                                         std::string ext2, QuadExtChar t2) {
  Constituent c;
  c.form_ = Form::Tensor4;
  c.ext_ = std::move(ext1);
  c.theta_ = tau_min(t1);
  c.ext2_ = std::move(ext2);
  c.theta2_ = tau_min(t2);
  c.cusp_ = Cuspidality::Yes;
  return c;
}

Kind Constituent::kind() const {
  switch (form_) {
    case Form::Gl2Sym:
      return (sym_ == 2 && det_ == -1) ? Kind::AdjointLift : Kind::SymPower;
    case Form::Char:
      return (det_ == 0 && chr_.trivial()) ? Kind::TrivialCharacter : Kind::HeckeCharacter;
    case Form::Induced:
      return Kind::InducedCharacter;
    case Form::Tensor4:
      return Kind::CuspidalTensor;
  }
  return Kind::TrivialCharacter;
}

int Constituent::dimension() const {
  switch (form_) {
    case Form::Gl2Sym: return sym_ + 1;
    case Form::Char: return 1;
    case Form::Induced: return 2;
    case Form::Tensor4: return 4;
  }
  return 1;
}

Constituent Constituent::dual() const {
  Constituent d = *this;
  switch (form_) {
    case Form::Gl2Sym:
      // dual(Sym^k * det^j) = Sym^k * det^(-j-k) by determinant bookkeeping
      d.det_ = -det_ - sym_;
      d.chr_ = chr_.inverse();
      break;
    case Form::Char:
      d.det_ = -det_;
      d.chr_ = chr_.inverse();
      break;
    case Form::Induced:
      d.theta_ = tau_min(theta_.inverse());
      break;
    case Form::Tensor4:
      d.theta_ = tau_min(theta_.inverse());
      d.theta2_ = tau_min(theta2_.inverse());
      break;
  }
  return d;
}

bool Constituent::self_dual() const { return label_equal(dual()); }

std::string Constituent::text() const {
  std::ostringstream os;
  switch (form_) {
    case Form::Gl2Sym: {
      if (kind() == Kind::AdjointLift) {
        os << "Ad(pi)";
      } else {
        os << "Sym" << sym_ << "(pi)";
        if (det_ != 0) {
          os << "*det";
          if (det_ != 1) os << "^" << det_;
        }
      }
      if (!chr_.trivial()) os << "*" << chr_.text();
      break;
    }
    case Form::Char: {
      bool have = false;
      if (det_ != 0) {
        os << "det";
        if (det_ != 1) os << "^" << det_;
        have = true;
      }
      if (!chr_.trivial()) {
        if (have) os << "*";
        os << chr_.text();
        have = true;
      }
      if (!have) os << "1";
      break;
    }
    case Form::Induced:
      os << "I_" << ext_ << "(" << theta_.text() << ")";
      break;
    case Form::Tensor4:
      os << "Cusp4(I_" << ext_ << "(" << theta_.text() << "),I_" << ext2_ << "("
         << theta2_.text() << "))";
      break;
  }
  return os.str();
}

std::strong_ordering Constituent::label_order(const Constituent& o) const {
  // Display/canonical order: descending dimension first.
  if (dimension() != o.dimension())
    return dimension() > o.dimension() ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  auto key = [](const Constituent& c) {
    return std::make_tuple(static_cast<int>(c.form_), c.sym_, c.det_, c.chr_.u,
                           c.chr_.chi, c.chr_.w, c.theta_, c.ext_, c.theta2_, c.ext2_);
  };
  return key(*this) <=> key(o);
}

}  // namespace lacunarity::satake
