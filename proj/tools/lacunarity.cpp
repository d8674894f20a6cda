// lacunarity — command-line front end for the eigenvalue-density toolkit.
//
// Subcommands:
//   decompose  symbolic isobaric decompositions and pole orders
//   bound      closed-form density-bound evaluation
//   verify     end-to-end density runs against arithmetic sources
//
// Exit codes: 0 ok/consistent, 1 inconsistent verification,
//             2 usage error, 3 data error.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "lacunarity/bounds/bounds.hpp"
#include "lacunarity/density/density.hpp"
#include "lacunarity/density/report.hpp"
#include "lacunarity/errors.hpp"
#include "lacunarity/satake/decompose.hpp"
#include "lacunarity/sources/artin_q8.hpp"
#include "lacunarity/sources/cache.hpp"
#include "lacunarity/sources/chebotarev.hpp"
#include "lacunarity/sources/dirichlet_char.hpp"
#include "lacunarity/sources/elliptic.hpp"

namespace {

using namespace lacunarity;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

// ---------------------------------------------------------------- helpers

std::complex<double> parse_complex(const std::string& s) {
  // forms: "1", "-2.5", "3+4i", "1-2i", "2i"
  std::string t = s;
  if (!t.empty() && (t.back() == 'i' || t.back() == 'I')) {
    t.pop_back();
    std::size_t split = t.find_last_of("+-");
    if (split == std::string::npos || split == 0) {
      const std::string imag = (t.empty() || t == "+" || t == "-") ? t + "1" : t;
      return {0.0, std::strtod(imag.c_str(), nullptr)};
    }
    std::string re = t.substr(0, split);
    std::string im = t.substr(split);
    if (im == "+" || im == "-") im += "1";
    return {std::strtod(re.c_str(), nullptr), std::strtod(im.c_str(), nullptr)};
  }
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || t.empty())
    throw ParseError("cannot parse complex number: '" + s + "'");
  return {v, 0.0};
}

std::optional<bounds::Rat> parse_rational(const std::string& s) {
  // integers and "p/q" go through the exact lane
  const std::size_t slash = s.find('/');
  auto parse_int = [](const std::string& t, long long& out) {
    char* end = nullptr;
    out = std::strtoll(t.c_str(), &end, 10);
    return !t.empty() && end == t.c_str() + t.size();
  };
  long long num = 0, den = 1;
  if (slash == std::string::npos) {
    if (!parse_int(s, num)) return std::nullopt;
    return bounds::Rat(num);
  }
  if (!parse_int(s.substr(0, slash), num) || !parse_int(s.substr(slash + 1), den) || den == 0)
    return std::nullopt;
  return bounds::Rat(num, den);
}

double parse_real(const std::string& s) {
  if (auto r = parse_rational(s)) return bounds::to_double(*r);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw ParseError("cannot parse number: '" + s + "'");
  return v;
}

std::string rat_text(const bounds::Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

void emit(const json& j, const std::string& format, const std::string& table) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (format == "table") {
    std::cout << table;
  } else {
    throw ParseError("unsupported format '" + format + "' here (use json or table)");
  }
}

// ---------------------------------------------------------------- decompose

satake::GL2Type parse_type(const std::string& name, bool invariant_flag) {
  if (name == "non-solvable" || name == "nonsolvable" || name == "generic")
    return satake::GL2Type::non_solvable();
  if (name == "dihedral") return satake::GL2Type::dihedral(invariant_flag);
  if (name == "dihedral-invariant") return satake::GL2Type::dihedral(true);
  if (name == "tetrahedral") return satake::GL2Type::tetrahedral();
  if (name == "octahedral") return satake::GL2Type::octahedral();
  throw ParseError("unknown representation type: '" + name + "'");
}

struct TensorExpr {
  bool is_gl3 = false;
  bool is_dihedral_op = false;
  int k = 0, l = 0;
};

TensorExpr parse_expr(const std::string& expr) {
  TensorExpr e;
  if (expr == "gl3-adjoint") {
    e.is_gl3 = true;
    return e;
  }
  if (expr == "dihedral") {
    e.is_dihedral_op = true;
    return e;
  }
  auto parse_side = [&](std::string side) {
    side.erase(0, side.find_first_not_of(' '));
    side.erase(side.find_last_not_of(' ') + 1);
    bool bar = false;
    if (side.rfind("pibar", 0) == 0) {
      bar = true;
      side = side.substr(5);
    } else if (side.rfind("pi", 0) == 0) {
      side = side.substr(2);
    } else {
      throw ParseError("expected pi or pibar in expression side: '" + side + "'");
    }
    int exp = 1;
    if (!side.empty()) {
      if (side[0] != '^') throw ParseError("malformed exponent: '" + side + "'");
      exp = std::atoi(side.c_str() + 1);
      if (exp < 1) throw ParseError("exponent must be positive: '" + side + "'");
    }
    (bar ? e.l : e.k) += exp;
  };
  const std::size_t cross = expr.find(" x ");
  if (cross == std::string::npos) {
    parse_side(expr);
  } else {
    parse_side(expr.substr(0, cross));
    parse_side(expr.substr(cross + 3));
  }
  return e;
}

int cmd_decompose(const std::string& expr, const std::string& type_name, bool invariant,
                  bool want_pole_order, bool want_self_pairing, const std::string& format) {
  const satake::GL2Type type = parse_type(type_name, invariant);
  const TensorExpr e = parse_expr(expr);

  satake::IsobaricRep rep;
  if (e.is_gl3) {
    rep = satake::gl3_adjoint_tensor(type);  // rejects solvable polyhedral bases
  } else if (e.is_dihedral_op) {
    if (!type.is_dihedral())
      throw ParseError("expression 'dihedral' needs --type dihedral[-invariant]");
    rep = satake::dihedral_pi_pibar(type.relation);
  } else {
    rep = satake::tensor_power_decompose(type, e.k, e.l);
  }

  json out;
  out["expression"] = expr;
  out["type"] = type_name;
  out["decomposition"] = rep.text();
  out["dimension"] = rep.total_dimension();
  out["constituents"] = json::parse(rep.json())["constituents"];

  if (want_pole_order) {
    // pairing order of L(s, left x right) for two-sided expressions; the
    // self-pairing order of the decomposed object otherwise
    long long pole = 0;
    if (!e.is_gl3 && !e.is_dihedral_op && e.k >= 1 && e.l >= 1)
      pole = satake::tensor_power_pole_order(type, e.k, e.l);
    else
      pole = satake::self_pairing_order(rep);
    out["pole_order"] = pole;
  }
  if (want_self_pairing) out["self_pairing"] = satake::self_pairing_order(rep);

  std::ostringstream table;
  table << rep.text() << "\n";
  if (out.contains("pole_order")) table << "pole order: " << out["pole_order"] << "\n";
  if (out.contains("self_pairing")) table << "self pairing: " << out["self_pairing"] << "\n";
  emit(out, format == "csv" ? "json" : format, table.str());
  return kExitOk;
}

// ---------------------------------------------------------------- bound

int cmd_bound(const std::string& name, const std::string& m_s, const std::string& mp_s,
              const std::string& mref_s, const std::string& gamma_s, const std::string& alpha_s,
              const std::string& n_s, const std::string& k_s, const std::string& c_s,
              const std::string& format) {
  json out;
  out["bound"] = name;
  json inputs;
  double value = 0.0;
  bool vacuous = false;
  std::string exact;

  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw ParseError(std::string("missing required option ") + flag);
    return v;
  };
  auto to_ll = [](const std::string& v) { return std::strtoll(v.c_str(), nullptr, 10); };

  if (name == "thm-c") {
    const long long m = to_ll(need(m_s, "--m"));
    inputs["m"] = m;
    inputs["gamma"] = need(gamma_s, "--gamma");
    if (auto g = parse_rational(gamma_s)) {
      const auto b = bounds::thm_c_bound_exact(m, *g);
      value = bounds::to_double(b.value);
      vacuous = b.vacuous;
      exact = rat_text(b.value);
    } else {
      const auto b = bounds::thm_c_bound(m, parse_real(gamma_s));
      value = b.value;
      vacuous = b.vacuous;
    }
  } else if (name == "thm-d") {
    const long long m = to_ll(need(m_s, "--m"));
    const long long mp = to_ll(need(mp_s, "--m-prime"));
    inputs["m"] = m;
    inputs["m_prime"] = mp;
    inputs["gamma"] = need(gamma_s, "--gamma");
    if (auto g = parse_rational(gamma_s)) {
      const auto b = bounds::thm_d_bound_exact(m, mp, *g);
      value = bounds::to_double(b.value);
      vacuous = b.vacuous;
      exact = rat_text(b.value);
    } else {
      const auto b = bounds::thm_d_bound(m, mp, parse_real(gamma_s));
      value = b.value;
      vacuous = b.vacuous;
    }
  } else if (name == "corollary") {
    inputs["gamma"] = need(gamma_s, "--gamma");
    if (auto g = parse_rational(gamma_s)) {
      const auto b = bounds::corollary_bound_exact(*g);
      value = bounds::to_double(b.value);
      vacuous = b.vacuous;
      exact = rat_text(b.value);
    } else {
      const auto b = bounds::corollary_bound(parse_real(gamma_s));
      value = b.value;
      vacuous = b.vacuous;
    }
  } else if (name == "propf") {
    const auto alpha = parse_complex(need(alpha_s, "--alpha"));
    inputs["alpha"] = alpha_s;
    value = bounds::propf_bound(alpha);
  } else if (name == "serre") {
    const long long r = to_ll(need(n_s, "--n"));
    inputs["r"] = r;
    const auto b = bounds::serre_bound(r);
    value = bounds::to_double(b);
    exact = rat_text(b);
  } else if (name == "ramakrishnan") {
    const double k = parse_real(need(k_s, "--k"));
    inputs["k"] = k;
    const auto b = bounds::ramakrishnan_bound(k);
    value = b.value;
    vacuous = b.vacuous;
  } else if (name == "theta") {
    const long long n = to_ll(need(n_s, "--n"));
    inputs["n"] = n;
    const auto t = bounds::theta(n);
    value = bounds::to_double(t);
    exact = rat_text(t);
  } else if (name == "optimal-c") {
    const long long m = to_ll(need(m_s, "--m"));
    const long long mp = to_ll(need(mp_s, "--m-prime"));
    const double g = parse_real(need(gamma_s, "--gamma"));
    inputs["m"] = m;
    inputs["m_prime"] = mp;
    inputs["gamma"] = g;
    value = bounds::optimal_c(m, mp, g);
  } else if (name == "two-moment") {
    const long long m = to_ll(need(m_s, "--m"));
    const long long mp = to_ll(need(mp_s, "--m-prime"));
    const double g = parse_real(need(gamma_s, "--gamma"));
    const double c = parse_real(need(c_s, "--c"));
    inputs["m"] = m;
    inputs["m_prime"] = mp;
    inputs["gamma"] = g;
    inputs["c"] = c;
    value = bounds::generic_two_moment_bound(m, mp, g, c);
  } else if (name == "crossover") {
    const long long m = to_ll(need(m_s, "--m"));
    const long long mp = to_ll(need(mp_s, "--m-prime"));
    const long long mref = to_ll(need(mref_s, "--m-ref"));
    inputs["m"] = m;
    inputs["m_prime"] = mp;
    inputs["m_ref"] = mref;
    const auto cross = bounds::crossover_gammas(m, mp, mref);
    out["inputs"] = inputs;
    out["identical"] = cross.identical;
    out["gammas"] = cross.gammas;
    json residuals = json::array();
    for (double g : cross.gammas) residuals.push_back(g * g * g * g - 3.0 * g * g + 1.0);
    out["tangency_residuals"] = residuals;
    // differing reference values recorded for side-by-side reading
    out["reference_values"] = {0.5 * std::sqrt(3.0 - std::sqrt(5.0)),
                               0.5 * std::sqrt(3.0 + std::sqrt(5.0))};
    std::ostringstream table;
    table << "crossover gammas:";
    for (double g : cross.gammas) table << " " << g;
    table << (cross.identical ? " (identical curves)" : "") << "\n";
    emit(out, format == "csv" ? "json" : format, table.str());
    return kExitOk;
  } else {
    throw ParseError("unknown bound '" + name + "'");
  }

  out["inputs"] = inputs;
  out["value"] = value;
  out["vacuous"] = vacuous;
  if (!exact.empty()) out["exact"] = exact;

  std::ostringstream table;
  table << name << " = " << value;
  if (!exact.empty()) table << " (= " << exact << ")";
  if (vacuous) table << " [vacuous]";
  table << "\n";
  emit(out, format == "csv" ? "json" : format, table.str());
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct SourceBundle {
  sources::EigenvalueStream stream;
  std::string rep_class;  // gl2-non-solvable | gl2-dihedral | gl1 | artin-model
  long long model_rank = 0;
};

SourceBundle build_source(const std::string& spec, std::int64_t limit,
                          std::int64_t limit_samples, std::uint64_t seed, int threads,
                          const std::optional<sources::StreamCache>& cache) {
  SourceBundle b;
  auto cached_or = [&](const std::string& id, auto&& compute) {
    if (cache) {
      if (auto hit = cache->load(id, limit)) return *hit;
    }
    sources::EigenvalueStream s = compute();
    if (cache) cache->store(s);
    return s;
  };

  if (spec.rfind("ec:", 0) == 0) {
    const auto curve = sources::EllipticCurveSource::parse(spec);
    b.rep_class = curve.has_cm() ? "gl2-dihedral" : "gl2-non-solvable";
    b.stream =
        cached_or(curve.id(), [&]() { return sources::ec_eigenvalues(curve, limit, threads); });
    b.model_rank = 2;
  } else if (spec == "q8" || spec.rfind("q8:", 0) == 0) {
    const auto src = spec == "q8" ? sources::ArtinQ8Source::default_source()
                                  : sources::ArtinQ8Source::from_file(spec.substr(3));
    b.rep_class = "gl2-dihedral";
    b.stream = cached_or(src.id(), [&]() { return sources::q8_frobenius(src, limit, threads); });
    b.model_rank = 2;
  } else if (spec.rfind("serre:", 0) == 0) {
    const long long r = std::strtoll(spec.c_str() + 6, nullptr, 10);
    const auto model = sources::serre_group_model(r);
    b.rep_class = "artin-model";
    b.model_rank = model.dimension();
    std::ostringstream hint;
    hint << "serre" << r;
    b.stream = sources::chebotarev_sample(model, limit_samples, seed, hint.str());
  } else if (spec.rfind("cheb:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw Error("cannot open model file: " + spec.substr(5));
    std::stringstream buf;
    buf << in.rdbuf();
    const auto model = sources::ChebotarevModel::from_json(buf.str());
    b.rep_class = "artin-model";
    b.model_rank = model.dimension();
    b.stream = sources::chebotarev_sample(model, limit_samples, seed, "chebfile");
  } else if (spec.rfind("dirichlet:", 0) == 0) {
    const std::string rest = spec.substr(10);
    const std::size_t comma = rest.find(',');
    const std::int64_t mod = std::strtoll(rest.substr(0, comma).c_str(), nullptr, 10);
    const int idx = comma == std::string::npos ? 1 : std::atoi(rest.substr(comma + 1).c_str());
    b.rep_class = "gl1";
    b.model_rank = 1;
    b.stream = sources::dirichlet_character_stream(mod, idx, limit);
  } else {
    throw ParseError("unknown source spec: '" + spec + "'");
  }
  return b;
}

std::map<std::string, std::string> parse_bound_params(const std::string& spec,
                                                      std::string& name) {
  std::map<std::string, std::string> params;
  const std::size_t colon = spec.find(':');
  name = spec.substr(0, colon);
  if (colon == std::string::npos) return params;
  std::istringstream is(spec.substr(colon + 1));
  std::string kv;
  while (std::getline(is, kv, ',')) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("bound parameter needs k=v: '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return params;
}

density::SetMode parse_set_mode(const std::string& s) {
  if (s == "abs-eq") return density::SetMode::AbsEquals;
  if (s == "abs-ne") return density::SetMode::AbsNotEquals;
  if (s == "val-eq") return density::SetMode::ValueEquals;
  if (s == "val-ne") return density::SetMode::ValueNotEquals;
  if (s == "abs-le") return density::SetMode::AbsAtMost;
  if (s == "abs-gt") return density::SetMode::AbsGreaterThan;
  throw ParseError("unknown set mode: '" + s + "'");
}

// resolve the bound value and direction for the chosen set orientation;
// lower bounds on a set convert to upper bounds 1 - B on its complement
density::BoundDescriptor resolve_bound(const std::string& bound_spec,
                                       const SourceBundle& source,
                                       const density::SetSpec& set) {
  std::string name;
  auto params = parse_bound_params(bound_spec, name);
  auto get_ll = [&](const char* key) -> std::optional<long long> {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    return std::strtoll(it->second.c_str(), nullptr, 10);
  };

  density::BoundDescriptor d;
  using density::SetMode;

  if (name == "thm-c" || name == "thm-d" || name == "corollary") {
    if ((name == "thm-d" || name == "corollary") && source.rep_class != "gl2-non-solvable")
      throw InapplicableBound(name + " needs a non-solvable-polyhedral GL(2) source; got " +
                              source.rep_class);
    if (set.mode != SetMode::AbsEquals && set.mode != SetMode::AbsNotEquals)
      throw InapplicableBound(name + " bounds |a|-based sets");
    const double gamma = std::abs(set.target);
    double B = 0.0;
    bool vac = false;
    if (name == "thm-c") {
      const auto m = get_ll("m");
      if (!m) throw ParseError("thm-c needs :m=<pole order>");
      const auto bv = bounds::thm_c_bound(*m, gamma);
      B = bv.value;
      vac = bv.vacuous;
      d.name = "thm-c[m=" + std::to_string(*m) + "]";
    } else if (name == "thm-d") {
      const auto m = get_ll("m"), mp = get_ll("mp");
      if (!m || !mp) throw ParseError("thm-d needs :m=..,mp=..");
      const auto bv = bounds::thm_d_bound(*m, *mp, gamma);
      B = bv.value;
      vac = bv.vacuous;
      d.name = "thm-d[m=" + std::to_string(*m) + ",mp=" + std::to_string(*mp) + "]";
    } else {
      const auto bv = bounds::corollary_bound(gamma);
      B = bv.value;
      vac = bv.vacuous;
      d.name = "corollary";
    }
    d.vacuous = vac;
    if (set.mode == SetMode::AbsNotEquals) {
      d.value = B;
      d.direction = density::BoundDirection::LowerOnSet;
    } else {
      d.value = 1.0 - B;
      d.direction = density::BoundDirection::UpperOnSet;
      d.name += ",complement";
    }
  } else if (name == "propf") {
    if (set.mode != SetMode::ValueEquals && set.mode != SetMode::ValueNotEquals)
      throw InapplicableBound("propf bounds value-based sets");
    const double B = bounds::propf_bound(set.target);
    d.name = "propf";
    if (set.mode == SetMode::ValueNotEquals) {
      d.value = B;
      d.direction = density::BoundDirection::LowerOnSet;
    } else {
      d.value = 1.0 - B;
      d.direction = density::BoundDirection::UpperOnSet;
      d.name += "[complement]";
    }
  } else if (name == "serre") {
    const long long r = get_ll("r").value_or(source.model_rank);
    if (r < 1) throw ParseError("serre needs :r=<rank> (or a model source)");
    const double B = bounds::to_double(bounds::serre_bound(r));  // upper bound, zero set
    d.name = "serre[r=" + std::to_string(r) + "]";
    if (set.mode == SetMode::AbsEquals || set.mode == SetMode::ValueEquals) {
      d.value = B;
      d.direction = density::BoundDirection::UpperOnSet;
    } else if (set.mode == SetMode::AbsNotEquals || set.mode == SetMode::ValueNotEquals) {
      d.value = 1.0 - B;
      d.direction = density::BoundDirection::LowerOnSet;
    } else {
      throw InapplicableBound("serre bounds zero sets");
    }
  } else if (name == "ramakrishnan") {
    auto it = params.find("k");
    const double k = it != params.end() ? parse_real(it->second) : std::abs(set.target);
    const auto bv = bounds::ramakrishnan_bound(k);
    d.name = "ramakrishnan[k=" + std::to_string(k) + "]";
    d.vacuous = bv.vacuous;
    if (set.mode == SetMode::AbsAtMost) {
      d.value = bv.value;
      d.direction = density::BoundDirection::LowerOnSet;
    } else if (set.mode == SetMode::AbsGreaterThan) {
      d.value = 1.0 - bv.value;
      d.direction = density::BoundDirection::UpperOnSet;
    } else {
      throw InapplicableBound("ramakrishnan bounds |a| <= k sets");
    }
  } else {
    throw ParseError("unknown bound '" + name + "'");
  }
  return d;
}

int cmd_verify(const std::string& source_spec, const std::string& bound_spec,
               const std::string& gamma_s, const std::string& alpha_s, const std::string& k_s,
               const std::string& set_mode_s, std::int64_t limit, std::int64_t limit_samples,
               std::uint64_t seed, const std::string& schedule_s, double slack,
               const std::string& cache_dir, bool no_cache, const std::string& plot_path,
               int threads, const std::string& format) {
  density::SetSpec set;
  if (!gamma_s.empty()) {
    set.mode = density::SetMode::AbsEquals;
    set.target = {parse_real(gamma_s), 0.0};
  } else if (!alpha_s.empty()) {
    set.mode = density::SetMode::ValueNotEquals;
    set.target = parse_complex(alpha_s);
  } else if (!k_s.empty()) {
    set.mode = density::SetMode::AbsAtMost;
    set.target = {parse_real(k_s), 0.0};
  } else {
    throw ParseError("verify needs one of --gamma, --alpha, --k");
  }
  if (!set_mode_s.empty()) set.mode = parse_set_mode(set_mode_s);

  if (limit < 100) throw ParseError("--limit must be at least 100");

  std::optional<sources::StreamCache> cache;
  if (!no_cache) {
    std::string dir = cache_dir;
    if (dir.empty()) {
      if (const char* env = std::getenv("LACUNARITY_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) dir = ".lacunarity-cache";
    cache.emplace(dir);
  }

  const SourceBundle source =
      build_source(source_spec, limit, limit_samples, seed, threads, cache);

  density::EstimateOptions opts;
  if (!schedule_s.empty()) {
    opts.schedule.clear();
    std::istringstream is(schedule_s);
    std::string tok;
    while (std::getline(is, tok, ',')) opts.schedule.push_back(parse_real(tok));
  }

  const auto bound = resolve_bound(bound_spec, source, set);
  const auto estimate = density::estimate_density(source.stream, set, opts);
  const auto report =
      density::verify_bound(estimate, set, bound, source.stream.source_id, slack);

  if (!plot_path.empty()) {
    std::ofstream out(plot_path, std::ios::trunc);
    if (!out) throw Error("cannot write plot data to " + plot_path);
    density::write_plot_data(report, out);
  }

  if (format == "json") {
    std::cout << density::report_to_json(report) << "\n";
  } else if (format == "csv") {
    std::cout << density::report_to_csv(report);
  } else if (format == "table") {
    std::cout << density::report_to_table(report);
  } else {
    throw ParseError("unknown format: '" + format + "'");
  }
  return report.consistent ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke-eigenvalue lacunarity toolkit"};
  app.require_subcommand(1);

  auto* dec = app.add_subcommand("decompose", "isobaric decompositions and pole orders");
  std::string dec_expr, dec_type = "non-solvable", dec_format = "table";
  bool dec_invariant = false, dec_pole = false, dec_self = false;
  dec->add_option("expression", dec_expr,
                  "e.g. \"pi x pibar\", \"pi^4 x pibar^4\", \"gl3-adjoint\", \"dihedral\"")
      ->required();
  dec->add_option("--type", dec_type,
                  "non-solvable | dihedral | dihedral-invariant | tetrahedral | octahedral");
  dec->add_flag("--invariant", dec_invariant, "dihedral ratio character is Galois-invariant");
  dec->add_flag("--pole-order", dec_pole,
                "pole order at s=1 of L(s, left x right); self-pairing for one-sided input");
  dec->add_flag("--self-pairing", dec_self, "self-pairing order of the decomposition");
  dec->add_option("--format", dec_format, "json | table");

  auto* bnd = app.add_subcommand("bound", "evaluate a density bound");
  std::string b_name, b_m, b_mp, b_mref, b_gamma, b_alpha, b_n, b_k, b_c, b_format = "table";
  bnd->add_option("name", b_name,
                  "thm-c | thm-d | corollary | propf | serre | ramakrishnan | theta | "
                  "optimal-c | two-moment | crossover")
      ->required();
  bnd->add_option("--m", b_m, "pole order m");
  bnd->add_option("--m-prime", b_mp, "pole order m'");
  bnd->add_option("--m-ref", b_mref, "reference pole order for crossover");
  bnd->add_option("--gamma", b_gamma, "target |a_v| (rational like 1/2 stays exact)");
  bnd->add_option("--alpha", b_alpha, "target value, e.g. 1, -1, 3+4i");
  bnd->add_option("--n", b_n, "rank (serre, theta)");
  bnd->add_option("--k", b_k, "threshold (ramakrishnan)");
  bnd->add_option("--c", b_c, "weight root (two-moment)");
  bnd->add_option("--format", b_format, "json | table");

  auto* ver = app.add_subcommand("verify", "verify a bound against an arithmetic source");
  std::string v_source, v_bound, v_gamma, v_alpha, v_k, v_set, v_schedule, v_cache_dir,
      v_plot, v_format = "json";
  std::int64_t v_limit = 100000, v_samples = 100000;
  std::uint64_t v_seed = 1;
  double v_slack = 0.05;
  bool v_no_cache = false;
  int v_threads = 0;
  ver->add_option("--source", v_source,
                  "ec:a1,a2,a3,a4,a6 | q8[:polyfile] | cheb:modelfile | serre:r | "
                  "dirichlet:mod,idx")
      ->required();
  ver->add_option("--bound", v_bound,
                  "thm-c:m=.. | thm-d:m=..,mp=.. | corollary | propf | serre[:r=..] | "
                  "ramakrishnan[:k=..]")
      ->required();
  ver->add_option("--gamma", v_gamma, "|a| target (set defaults to |a| = gamma)");
  ver->add_option("--alpha", v_alpha, "value target (set defaults to a != alpha)");
  ver->add_option("--k", v_k, "threshold target (set defaults to |a| <= k)");
  ver->add_option("--set", v_set, "abs-eq | abs-ne | val-eq | val-ne | abs-le | abs-gt");
  ver->add_option("--limit", v_limit, "prime bound N");
  ver->add_option("--limit-samples", v_samples, "draw count for synthetic models");
  ver->add_option("--seed", v_seed, "random seed for synthetic models");
  ver->add_option("--schedule", v_schedule, "comma-separated s values in (1, 1.25]");
  ver->add_option("--slack", v_slack, "declared slack for the consistency verdict");
  ver->add_option("--cache-dir", v_cache_dir,
                  "stream cache directory (env LACUNARITY_CACHE_DIR, default "
                  ".lacunarity-cache)");
  ver->add_flag("--no-cache", v_no_cache, "disable the stream cache");
  ver->add_option("--plot-data", v_plot, "write (s-1, ratio) pairs to this file");
  ver->add_option("--threads", v_threads, "worker threads (0 = hardware)");
  ver->add_option("--format", v_format, "json | csv | table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dec->parsed())
      return cmd_decompose(dec_expr, dec_type, dec_invariant, dec_pole, dec_self, dec_format);
    if (bnd->parsed())
      return cmd_bound(b_name, b_m, b_mp, b_mref, b_gamma, b_alpha, b_n, b_k, b_c, b_format);
    if (ver->parsed())
      return cmd_verify(v_source, v_bound, v_gamma, v_alpha, v_k, v_set, v_limit, v_samples,
                        v_seed, v_schedule, v_slack, v_cache_dir, v_no_cache, v_plot,
                        v_threads, v_format);
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedType& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InapplicableBound& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadModulus& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadS& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
