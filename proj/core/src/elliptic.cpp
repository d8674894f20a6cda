#include "lacunarity/sources/elliptic.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "lacunarity/errors.hpp"
#include "lacunarity/sources/primes.hpp"

namespace lacunarity::sources {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct CurveData {
  BigInt b2, b4, b6, b8, disc, c4;
};

CurveData curve_data(const EllipticCurveSource& e) {
  const BigInt a1 = e.a1, a2 = e.a2, a3 = e.a3, a4 = e.a4, a6 = e.a6;
  CurveData d;
  d.b2 = a1 * a1 + 4 * a2;
  d.b4 = 2 * a4 + a1 * a3;
  d.b6 = a3 * a3 + 4 * a6;
  d.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  d.disc = -d.b2 * d.b2 * d.b8 - 8 * d.b4 * d.b4 * d.b4 - 27 * d.b6 * d.b6 +
           9 * d.b2 * d.b4 * d.b6;
  d.c4 = d.b2 * d.b2 - 24 * d.b4;
  return d;
}

std::int64_t mod_reduce(const BigInt& v, std::int64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::int64_t>();
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// rational CM j-invariants (class number one)
const BigInt kCmJ[] = {
    BigInt(0),
    BigInt(1728),
    BigInt(-3375),
    BigInt(8000),
    BigInt(54000),
    BigInt(287496),
    BigInt(-32768),
    BigInt(16581375),
    BigInt(-884736),
    BigInt(-12288000),
    BigInt(-884736000),
    BigInt(-147197952000),
    BigInt("-262537412640768000"),
};

// Packed quadratic-residue table for odd p, two bits per residue class
// (code 0 nonresidue, 1 residue, 2 zero).  The packed form stays L2
// resident up to p ~ 1e6, which dominates the scan cost.  Squares are
// generated incrementally ((i+1)^2 - i^2 = 2i+1), no division in the loop.
void fill_chi(std::vector<std::uint8_t>& packed, std::int64_t p) {
  packed.assign(static_cast<std::size_t>((p + 3) / 4), 0);
  packed[0] = 2;  // chi(0)
  std::int64_t sq = 0;
  std::int64_t step = 1;  // 2i - 1 stays below p for i <= (p-1)/2
  for (std::int64_t i = 1; i <= (p - 1) / 2; ++i) {
    sq += step;
    if (sq >= p) sq -= p;
    step += 2;
    packed[static_cast<std::size_t>(sq >> 2)] |=
        static_cast<std::uint8_t>(1u << ((sq & 3) << 1));
  }
}

// a_p = -sum_x chi(4x^3 + b2 x^2 + 2 b4 x + b6), valid for odd p
std::int64_t trace_char_sum(const CurveData& d, std::int64_t p,
                            const std::vector<std::uint8_t>& packed) {
  static constexpr std::int8_t kChiOfCode[4] = {-1, 1, 0, 0};
  const std::int64_t b2 = mod_reduce(d.b2, p);
  const std::int64_t b4 = mod_reduce(d.b4, p);
  const std::int64_t b6 = mod_reduce(d.b6, p);
  // cubic forward differences: f(0), df(0), d2f(0), d3f = 24
  std::int64_t v = b6;
  std::int64_t d1 = mod_reduce(4 + b2 + 2 * b4, p);
  std::int64_t d2 = mod_reduce(24 + 2 * b2, p);
  const std::int64_t d3 = mod_reduce(24, p);
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    const unsigned code = (packed[static_cast<std::size_t>(v >> 2)] >> ((v & 3) << 1)) & 3u;
    sum += kChiOfCode[code];
    v += d1;
    if (v >= p) v -= p;
    d1 += d2;
    if (d1 >= p) d1 -= p;
    d2 += d3;
    if (d2 >= p) d2 -= p;
  }
  return -sum;
}

std::int64_t trace_enumerate_p2(const EllipticCurveSource& e) {
  int affine = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      std::int64_t lhs = y * y + e.a1 * x * y + e.a3 * y;
      std::int64_t rhs = static_cast<std::int64_t>(x) * x * x + e.a2 * x * x + e.a4 * x + e.a6;
      if (mod_reduce(lhs - rhs, 2) == 0) ++affine;
    }
  return 2 + 1 - (affine + 1);
}

void hasse_check(std::int64_t a, std::int64_t p, const std::string& id) {
  if (a * a > 4 * p)
    throw Error("Hasse bound violated for " + id + " at p=" + std::to_string(p));
}

}  // namespace

void EllipticCurveSource::validate() const {
  if (curve_data(*this).disc == 0)
    throw SingularCurve("singular curve: " + id());
}

bool EllipticCurveSource::good_at(std::int64_t p) const {
  return mod_reduce(curve_data(*this).disc, p) != 0;
}

bool EllipticCurveSource::has_cm() const {
  const CurveData d = curve_data(*this);
  if (d.disc == 0) throw SingularCurve("singular curve: " + id());
  const BigInt c4cubed = d.c4 * d.c4 * d.c4;
  if (c4cubed % d.disc != 0) return false;
  const BigInt j = c4cubed / d.disc;
  for (const BigInt& cm : kCmJ)
    if (j == cm) return true;
  return false;
}

std::string EllipticCurveSource::id() const {
  std::ostringstream os;
  os << "ec:" << a1 << "," << a2 << "," << a3 << "," << a4 << "," << a6;
  return os.str();
}

EllipticCurveSource EllipticCurveSource::parse(const std::string& spec) {
  std::string body = spec;
  if (body.rfind("ec:", 0) == 0) body = body.substr(3);
  EllipticCurveSource e;
  std::int64_t* fields[5] = {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6};
  std::istringstream is(body);
  std::string tok;
  for (int i = 0; i < 5; ++i) {
    if (!std::getline(is, tok, ','))
      throw ParseError("curve spec needs five coefficients: '" + spec + "'");
    *fields[i] = std::strtoll(tok.c_str(), nullptr, 10);
  }
  if (std::getline(is, tok, ','))
    throw ParseError("curve spec has trailing fields: '" + spec + "'");
  e.validate();
  return e;
}

std::int64_t ec_trace(const EllipticCurveSource& curve, std::int64_t p) {
  if (!curve.good_at(p)) throw Error("ec_trace: bad reduction at p=" + std::to_string(p));
  if (p == 2) return trace_enumerate_p2(curve);
  const CurveData d = curve_data(curve);
  std::vector<std::uint8_t> chi;
  fill_chi(chi, p);
  std::int64_t a = trace_char_sum(d, p, chi);
  hasse_check(a, p, curve.id());
  return a;
}

EigenvalueStream ec_eigenvalues(const EllipticCurveSource& curve, std::int64_t limit,
                                int threads) {
  curve.validate();
  const CurveData data = curve_data(curve);
  const auto primes = prime_sieve(limit);

  // bad primes are exactly the prime divisors of the discriminant
  std::vector<char> good(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i)
    good[i] = mod_reduce(data.disc, primes[i]) != 0;

  std::vector<std::int64_t> traces(primes.size(), 0);
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(hw == 0 ? 1 : hw);
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    std::vector<std::uint8_t> chi;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      if (!good[i]) continue;
      const std::int64_t p = primes[i];
      if (p == 2) {
        traces[i] = trace_enumerate_p2(curve);
      } else {
        fill_chi(chi, p);
        traces[i] = trace_char_sum(data, p, chi);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  EigenvalueStream s;
  s.source_id = curve.id();
  s.weight = 2;
  s.limit = limit;
  s.entries.reserve(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!good[i]) continue;
    const std::int64_t p = primes[i];
    const std::int64_t a = traces[i];
    hasse_check(a, p, s.source_id);
    StreamEntry e;
    e.prime = p;
    e.raw = {static_cast<double>(a), 0.0};
    e.normalized = {static_cast<double>(a) / std::sqrt(static_cast<double>(p)), 0.0};
    e.exact_zero = (a == 0);
    s.entries.push_back(e);
  }
  s.validate();
  return s;
}

}  // namespace lacunarity::sources
