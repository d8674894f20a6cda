#include "lacunarity/satake/isobaric.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "lacunarity/errors.hpp"

namespace lacunarity::satake {

namespace {

Cuspidality reconcile(Cuspidality a, Cuspidality b) {
  if (a == b) return a;
  if (a == Cuspidality::Unknown) return b;
  if (b == Cuspidality::Unknown) return a;
  throw Error("isobaric merge: conflicting cuspidality flags for one label");
}

long long parse_ll(const std::string& s) {
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || s.empty()) throw ParseError("bad integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

// factor := name | name^E
void parse_factor(const std::string& f, std::string& name, long long& exp) {
  std::size_t caret = f.find('^');
  name = f.substr(0, caret);
  exp = (caret == std::string::npos) ? 1 : parse_ll(f.substr(caret + 1));
}

CharLabel parse_char_label(const std::string& s, long long* det_exp = nullptr) {
  CharLabel c;
  if (s == "1") return c;
  for (const auto& f : split(s, "*")) {
    std::string name;
    long long e = 0;
    parse_factor(f, name, e);
    if (name == "chi") c.chi += static_cast<int>(e);
    else if (name == "u") c.u += static_cast<int>(e);
    else if (name == "w") c.w += e;
    else if (name == "det" && det_exp) *det_exp += e;
    else throw ParseError("unknown character factor: '" + f + "'");
  }
  return CharLabel::make(c.chi, c.u, c.w);
}

QuadExtChar parse_quad_ext_char(const std::string& s) {
  QuadExtChar t;
  if (s == "1") return t;
  for (const auto& f : split(s, "*")) {
    std::string name;
    long long e = 0;
    parse_factor(f, name, e);
    if (name == "mu") t.a += e;
    else if (name == "mutau") t.b += e;
    else throw ParseError("unknown extension-character factor: '" + f + "'");
  }
  return t;
}

// "I_EXT(theta)" -> (EXT, theta)
std::pair<std::string, QuadExtChar> parse_induced_body(const std::string& s) {
  if (s.rfind("I_", 0) != 0) throw ParseError("expected induced character: '" + s + "'");
  std::size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw ParseError("malformed induced character: '" + s + "'");
  std::string ext = s.substr(2, open - 2);
  QuadExtChar t = parse_quad_ext_char(s.substr(open + 1, s.size() - open - 2));
  return {ext, t};
}

Constituent parse_atom(const std::string& atom) {
  if (atom.empty()) throw ParseError("empty constituent");
  if (atom == "1") return Constituent::one();
  if (atom.rfind("Sym", 0) == 0) {
    std::size_t open = atom.find('(');
    if (open == std::string::npos || atom.compare(open, 4, "(pi)") != 0)
      throw ParseError("malformed Sym power: '" + atom + "'");
    int k = static_cast<int>(parse_ll(atom.substr(3, open - 3)));
    long long det = 0;
    CharLabel chr;
    std::size_t rest = open + 4;
    if (rest < atom.size()) {
      if (atom[rest] != '*') throw ParseError("malformed Sym power: '" + atom + "'");
      chr = parse_char_label(atom.substr(rest + 1), &det);
    }
    return Constituent::sym_power(k, det, chr);
  }
  if (atom.rfind("Ad(pi)", 0) == 0) {
    CharLabel chr;
    long long extra_det = 0;
    if (atom.size() > 6) {
      if (atom[6] != '*') throw ParseError("malformed adjoint: '" + atom + "'");
      chr = parse_char_label(atom.substr(7), &extra_det);
    }
    return Constituent::sym_power(2, -1 + extra_det, chr);
  }
  if (atom.rfind("Cusp4(", 0) == 0) {
    if (atom.back() != ')') throw ParseError("malformed Cusp4: '" + atom + "'");
    std::string inner = atom.substr(6, atom.size() - 7);
    std::size_t comma = inner.find("),I_");
    if (comma == std::string::npos) throw ParseError("malformed Cusp4: '" + atom + "'");
    auto [e1, t1] = parse_induced_body(inner.substr(0, comma + 1));
    auto [e2, t2] = parse_induced_body(inner.substr(comma + 2));
    return Constituent::cuspidal_tensor(e1, t1, e2, t2);
  }
  if (atom.rfind("I_", 0) == 0) {
    auto [ext, t] = parse_induced_body(atom);
    return Constituent::induced(t, ext);
  }
  // a bare character, possibly with det powers: "det^2*chi", "w^-1", ...
  long long det = 0;
  CharLabel chr = parse_char_label(atom, &det);
  return Constituent::character(chr, det);
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::TrivialCharacter: return "TrivialCharacter";
    case Kind::HeckeCharacter: return "HeckeCharacter";
    case Kind::SymPower: return "SymPower";
    case Kind::AdjointLift: return "AdjointLift";
    case Kind::InducedCharacter: return "InducedCharacter";
    case Kind::CuspidalTensor: return "CuspidalTensor";
  }
  return "?";
}

}  // namespace

IsobaricRep IsobaricRep::one() { return single(Constituent::one()); }

IsobaricRep IsobaricRep::single(const Constituent& c, long long mult) {
  IsobaricRep r;
  r.add(c, mult);
  return r;
}

void IsobaricRep::add(const Constituent& c, long long mult) {
  if (mult == 0) return;
  if (mult < 0) throw Error("isobaric multiplicities must be positive");
  auto [it, inserted] = parts_.try_emplace(c, mult);
  if (!inserted) {
    it->second += mult;
    Cuspidality merged = reconcile(it->first.cuspidality(), c.cuspidality());
    if (merged != it->first.cuspidality()) {
      Constituent key = it->first;
      key.set_cuspidality(merged);
      long long m = it->second;
      parts_.erase(it);
      parts_.emplace(key, m);
    }
  }
}

void IsobaricRep::add(const IsobaricRep& other, long long mult) {
  for (const auto& [c, m] : other.parts_) add(c, m * mult);
}

long long IsobaricRep::multiplicity(const Constituent& c) const {
  auto it = parts_.find(c);
  return it == parts_.end() ? 0 : it->second;
}

long long IsobaricRep::total_dimension() const {
  long long d = 0;
  for (const auto& [c, m] : parts_) d += static_cast<long long>(c.dimension()) * m;
  return d;
}

IsobaricRep IsobaricRep::dual() const {
  IsobaricRep r;
  for (const auto& [c, m] : parts_) r.add(c.dual(), m);
  return r;
}

bool IsobaricRep::operator==(const IsobaricRep& o) const {
  if (parts_.size() != o.parts_.size()) return false;
  auto a = parts_.begin();
  auto b = o.parts_.begin();
  for (; a != parts_.end(); ++a, ++b) {
    if (!a->first.label_equal(b->first) || a->second != b->second) return false;
  }
  return true;
}

std::string IsobaricRep::text() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, m] : parts_) {
    if (!first) os << " (+) ";
    if (m != 1) os << m << " x ";
    os << c.text();
    first = false;
  }
  return os.str();
}

IsobaricRep IsobaricRep::parse(const std::string& s) {
  IsobaricRep r;
  if (s == "0" || s.empty()) return r;
  for (std::string term : split(s, " (+) ")) {
    long long mult = 1;
    std::size_t x = term.find(" x ");
    if (x != std::string::npos) {
      mult = parse_ll(term.substr(0, x));
      term = term.substr(x + 3);
    }
    Constituent c = parse_atom(term);
    // parsed constituents carry no resolved flag for Sym powers
    if (c.is_gl2_sym()) c.set_cuspidality(Cuspidality::Unknown);
    r.add(c, mult);
  }
  return r;
}

std::string IsobaricRep::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [c, m] : parts_) {
    nlohmann::json e;
    e["kind"] = kind_name(c.kind());
    e["k"] = c.sym_degree();
    e["det"] = c.det_exponent();
    if (c.is_induced()) {
      e["ext"] = c.extension();
      e["char"] = c.induced_char().text();
    } else if (c.kind() == Kind::CuspidalTensor) {
      e["char"] = c.text();
    } else {
      e["char"] = c.char_label().text();
    }
    e["mult"] = m;
    switch (c.cuspidality()) {
      case Cuspidality::Yes: e["cuspidal"] = true; break;
      case Cuspidality::No: e["cuspidal"] = false; break;
      case Cuspidality::Unknown: e["cuspidal"] = nullptr; break;
    }
    arr.push_back(std::move(e));
  }
  nlohmann::json root;
  root["constituents"] = std::move(arr);
  return root.dump();
}

IsobaricRep IsobaricRep::from_json(const std::string& s) {
  nlohmann::json root = nlohmann::json::parse(s, nullptr, false);
  if (root.is_discarded() || !root.contains("constituents"))
    throw ParseError("malformed isobaric JSON");
  IsobaricRep r;
  for (const auto& e : root["constituents"]) {
    std::string kind = e.at("kind").get<std::string>();
    long long mult = e.value("mult", 1LL);
    Cuspidality cusp = Cuspidality::Unknown;
    if (e.contains("cuspidal") && !e["cuspidal"].is_null())
      cusp = e["cuspidal"].get<bool>() ? Cuspidality::Yes : Cuspidality::No;
    Constituent c;
    if (kind == "SymPower" || kind == "AdjointLift") {
      c = Constituent::sym_power(e.at("k").get<int>(), e.at("det").get<long long>(),
                                 parse_char_label(e.value("char", std::string("1"))), cusp);
    } else if (kind == "InducedCharacter") {
      c = Constituent::induced(parse_quad_ext_char(e.at("char").get<std::string>()),
                               e.value("ext", std::string("E")), cusp);
    } else if (kind == "CuspidalTensor") {
      c = parse_atom(e.at("char").get<std::string>());
    } else if (kind == "TrivialCharacter" || kind == "HeckeCharacter") {
      long long det = e.value("det", 0LL);
      c = Constituent::character(parse_char_label(e.value("char", std::string("1"))), det);
    } else {
      throw ParseError("unknown constituent kind: '" + kind + "'");
    }
    r.add(c, mult);
  }
  return r;
}

long long pole_order(const IsobaricRep& A, const IsobaricRep& B) {
  auto check = [](const IsobaricRep& r) {
    for (const auto& [c, m] : r.parts()) {
      (void)m;
      if (c.cuspidality() == Cuspidality::Unknown)
        throw UnresolvedConstituent("pole_order: unresolved cuspidality for " + c.text());
      if (c.cuspidality() == Cuspidality::No)
        throw NonCuspidalConstituent("pole_order: non-cuspidal constituent " + c.text() +
                                     " must be decomposed before pairing");
    }
  };
  check(A);
  check(B);
  long long order = 0;
  for (const auto& [tau, b] : B.parts()) {
    long long a = A.multiplicity(tau.dual());
    order += a * b;
  }
  return order;
}

long long self_pairing_order(const IsobaricRep& A) { return pole_order(A, A.dual()); }

}  // namespace lacunarity::satake
