#include "lacunarity/sources/chebotarev.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lacunarity/errors.hpp"
#include "lacunarity/sources/primes.hpp"

namespace lacunarity::sources {

namespace {

bool is_prime_small(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// uniform in [0,1) from the raw 64-bit engine output; distribution code in
// <random> is implementation-defined, this is not
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void ChebotarevModel::validate() const {
  if (group_order <= 0) throw Error("chebotarev model: group order must be positive");
  long long total = 0;
  int identities = 0;
  for (const auto& c : classes) {
    if (c.size <= 0) throw Error("chebotarev model: class sizes must be positive");
    if (c.elt_order <= 0) throw Error("chebotarev model: element orders must be positive");
    total += c.size;
    if (c.elt_order == 1) {
      ++identities;
      if (c.size != 1) throw Error("chebotarev model: identity class must have size 1");
      const double dim = c.trace.real();
      if (c.trace.imag() != 0.0 || dim <= 0.0 || dim != std::floor(dim))
        throw Error("chebotarev model: identity trace must be the representation dimension");
    }
  }
  if (total != group_order)
    throw Error("chebotarev model: class sizes must sum to the group order");
  if (identities != 1) throw Error("chebotarev model: exactly one identity class required");
}

long long ChebotarevModel::dimension() const {
  for (const auto& c : classes)
    if (c.elt_order == 1) return static_cast<long long>(c.trace.real());
  throw Error("chebotarev model: no identity class");
}

ChebotarevModel ChebotarevModel::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed chebotarev model JSON");
  ChebotarevModel m;
  m.group_order = j.at("order").get<long long>();
  for (const auto& e : j.at("classes")) {
    ConjClass c;
    c.name = e.value("name", std::string(""));
    c.size = e.at("size").get<long long>();
    c.trace = {e.at("trace_re").get<double>(), e.value("trace_im", 0.0)};
    c.elt_order = e.at("elt_order").get<long long>();
    m.classes.push_back(std::move(c));
  }
  m.validate();
  return m;
}

std::string ChebotarevModel::to_json() const {
  nlohmann::json j;
  j["order"] = group_order;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : classes) {
    nlohmann::json e;
    e["name"] = c.name;
    e["size"] = c.size;
    e["trace_re"] = c.trace.real();
    e["trace_im"] = c.trace.imag();
    e["elt_order"] = c.elt_order;
    arr.push_back(std::move(e));
  }
  j["classes"] = std::move(arr);
  return j.dump();
}

ChebotarevModel serre_group_model(long long r) {
  if (!is_prime_small(r)) throw UnsupportedR("serre_group_model: r must be prime");
  ChebotarevModel m;
  if (r == 2) {
    // the quaternion group Q8 with its two-dimensional irreducible
    m.group_order = 8;
    m.classes = {{"1", 1, {2.0, 0.0}, 1},
                 {"-1", 1, {-2.0, 0.0}, 2},
                 {"i", 2, {0.0, 0.0}, 4},
                 {"j", 2, {0.0, 0.0}, 4},
                 {"k", 2, {0.0, 0.0}, 4}};
  } else {
    // extraspecial of order r^3 and exponent r: r central classes of size 1
    // with traces r*zeta_r^t, and r^2 - 1 classes of size r with trace 0
    m.group_order = r * r * r;
    for (long long t = 0; t < r; ++t) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(r);
      std::ostringstream name;
      name << "z^" << t;
      std::complex<double> trace =
          t == 0 ? std::complex<double>{static_cast<double>(r), 0.0}
                 : static_cast<double>(r) * std::complex<double>{std::cos(angle), std::sin(angle)};
      m.classes.push_back({name.str(), 1, trace, t == 0 ? 1 : r});
    }
    for (long long i = 0; i < r * r - 1; ++i) {
      std::ostringstream name;
      name << "c" << i;
      m.classes.push_back({name.str(), r, {0.0, 0.0}, r});
    }
  }
  m.validate();
  return m;
}

Rat chebotarev_density(const ChebotarevModel& model,
                       const std::function<bool(std::complex<double>)>& predicate) {
  model.validate();
  long long hit = 0;
  for (const auto& c : model.classes)
    if (predicate(c.trace)) hit += c.size;
  return Rat(hit, model.group_order);
}

EigenvalueStream chebotarev_sample(const ChebotarevModel& model, std::int64_t count,
                                   std::uint64_t seed, const std::string& id_hint) {
  model.validate();
  if (count < 0) throw RangeError("chebotarev_sample: count must be non-negative");

  std::vector<double> cumulative;
  cumulative.reserve(model.classes.size());
  double acc = 0.0;
  for (const auto& c : model.classes) {
    acc += static_cast<double>(c.size) / static_cast<double>(model.group_order);
    cumulative.push_back(acc);
  }

  EigenvalueStream s;
  std::ostringstream id;
  id << (id_hint.empty() ? "cheb" : id_hint) << ":n" << count << ":seed" << seed;
  s.source_id = id.str();
  s.weight = 1;
  s.limit = count;

  const auto primes = first_primes(count);
  std::mt19937_64 rng(seed);
  for (std::int64_t i = 0; i < count; ++i) {
    const double u = unit_double(rng);
    std::size_t cls = 0;
    while (cls + 1 < cumulative.size() && u >= cumulative[cls]) ++cls;
    const auto& c = model.classes[cls];
    StreamEntry e;
    e.prime = primes[static_cast<std::size_t>(i)];
    e.raw = c.trace;
    e.normalized = c.trace;
    e.exact_zero = c.trace.real() == 0.0 && c.trace.imag() == 0.0;
    s.entries.push_back(e);
  }
  s.validate();
  return s;
}

}  // namespace lacunarity::sources
