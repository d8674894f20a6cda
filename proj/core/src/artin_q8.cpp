#include "lacunarity/sources/artin_q8.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "lacunarity/errors.hpp"
#include "lacunarity/sources/primes.hpp"

namespace lacunarity::sources {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
constexpr int kDeg = 8;

struct Mod {
  u64 p;
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 pw(u64 b, u64 e) const {
    u64 r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pw(a, p - 2); }
};

// residues of a monic degree-8 polynomial: x^8 + sum f[i] x^i
using Res = std::array<u64, kDeg>;

struct PolyCtx {
  Mod m;
  Res f{};

  Res mulmod(const Res& a, const Res& b) const {
    std::array<u64, 2 * kDeg - 1> r{};
    for (int i = 0; i < kDeg; ++i)
      if (a[i])
        for (int j = 0; j < kDeg; ++j)
          if (b[j]) r[i + j] = static_cast<u64>((static_cast<u128>(a[i]) * b[j] + r[i + j]) % m.p);
    for (int k = 2 * kDeg - 2; k >= kDeg; --k) {
      const u64 c = r[k];
      if (!c) continue;
      r[k] = 0;
      for (int i = 0; i < kDeg; ++i) r[k - kDeg + i] = m.sub(r[k - kDeg + i], m.mul(c, f[i]));
    }
    Res out{};
    for (int i = 0; i < kDeg; ++i) out[i] = r[i];
    return out;
  }

  Res xpow(u64 e) const {
    Res base{};
    base[1] = 1 % m.p;
    Res res{};
    res[0] = 1 % m.p;
    while (e) {
      if (e & 1) res = mulmod(res, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return res;
  }

  // g(h) mod f — composition realizes iterated Frobenius from x^p
  Res compose(const Res& g, const Res& h) const {
    Res res{};
    for (int i = kDeg - 1; i >= 0; --i) {
      res = mulmod(res, h);
      res[0] = (res[0] + g[i]) % m.p;
    }
    return res;
  }
};

int degree(const std::vector<u64>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (v[i]) return i;
  return -1;
}

std::vector<u64> poly_gcd(std::vector<u64> a, std::vector<u64> b, const Mod& m) {
  for (;;) {
    const int db = degree(b);
    if (db < 0) return a;
    const int da = degree(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    const u64 c = m.mul(a[static_cast<std::size_t>(da)],
                        m.inv(b[static_cast<std::size_t>(db)]));
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(i + da - db)] =
          m.sub(a[static_cast<std::size_t>(i + da - db)], m.mul(c, b[static_cast<std::size_t>(i)]));
  }
}

bool is_x(const Res& r, const Mod& m) {
  if (r[1] != 1 % m.p) return false;
  for (int i = 0; i < kDeg; ++i)
    if (i != 1 && r[i]) return false;
  return true;
}

}  // namespace

ArtinQ8Source ArtinQ8Source::default_source() {
  // x^8 - 72x^6 + 180x^4 - 144x^2 + 36; the Q8 statistics of this default
  // are not taken on faith — validate_q8 checks the observed Frobenius-order
  // frequencies against (1/8, 1/8, 3/4).
  ArtinQ8Source s;
  s.coeffs = {36, 0, -144, 0, 180, 0, -72, 0, 1};
  return s;
}

ArtinQ8Source ArtinQ8Source::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open polynomial file: " + path);
  ArtinQ8Source s;
  for (int i = 0; i < 9; ++i)
    if (!(in >> s.coeffs[static_cast<std::size_t>(i)]))
      throw ParseError("polynomial file needs nine integers (low to high): " + path);
  s.validate_shape();
  return s;
}

void ArtinQ8Source::validate_shape() const {
  if (coeffs[8] != 1) throw ParseError("defining polynomial must be monic of degree 8");
}

std::string ArtinQ8Source::id() const {
  std::ostringstream os;
  os << "q8:";
  for (int i = 0; i < 9; ++i) {
    if (i) os << ",";
    os << coeffs[static_cast<std::size_t>(i)];
  }
  return os.str();
}

FrobResult q8_frobenius_at(const ArtinQ8Source& src, std::int64_t p) {
  if (p < 2) throw RangeError("q8_frobenius_at: p must be prime");
  Mod m{static_cast<u64>(p)};
  PolyCtx ctx;
  ctx.m = m;
  for (int i = 0; i < kDeg; ++i) {
    std::int64_t v = src.coeffs[static_cast<std::size_t>(i)] % p;
    if (v < 0) v += p;
    ctx.f[static_cast<std::size_t>(i)] = static_cast<u64>(v);
  }

  // ramified <=> gcd(f, f') != 1 mod p
  std::vector<u64> fv(kDeg + 1), fd(kDeg);
  for (int i = 0; i < kDeg; ++i) fv[static_cast<std::size_t>(i)] = ctx.f[static_cast<std::size_t>(i)];
  fv[kDeg] = 1 % m.p;
  for (int i = 1; i <= kDeg; ++i)
    fd[static_cast<std::size_t>(i - 1)] =
        m.mul(static_cast<u64>(i % p), fv[static_cast<std::size_t>(i)]);
  if (degree(poly_gcd(fv, fd, m)) != 0) return FrobResult::Ramified;

  // all irreducible factor degrees equal ord(Frob); detect it as the least
  // d in {1,2,4} with x^{p^d} = x mod f, flagging mixed-degree splits
  Res frob[4];
  frob[0] = ctx.xpow(static_cast<u64>(p));
  for (int k = 1; k < 4; ++k) frob[k] = ctx.compose(frob[k - 1], frob[k - 1]);

  for (int k = 0; k < 4; ++k) {
    if (!is_x(frob[k], m)) continue;
    for (int e = 0; e < k; ++e) {
      Res diff = frob[e];
      diff[1] = m.sub(diff[1], 1 % m.p);
      std::vector<u64> dv(diff.begin(), diff.end());
      if (degree(poly_gcd(fv, dv, m)) > 0)
        throw NotGaloisConsistent("mixed factor degrees mod " + std::to_string(p) +
                                  " — wrong defining polynomial");
    }
    switch (1 << k) {
      case 1: return FrobResult::Order1;
      case 2: return FrobResult::Order2;
      case 4: return FrobResult::Order4;
      default:
        throw NotGaloisConsistent("Frobenius of order 8 mod " + std::to_string(p) +
                                  " — wrong defining polynomial for Q8");
    }
  }
  throw NotGaloisConsistent("Frobenius order exceeds 8 mod " + std::to_string(p) +
                            " — wrong defining polynomial for Q8");
}

EigenvalueStream q8_frobenius(const ArtinQ8Source& src, std::int64_t limit, int threads) {
  src.validate_shape();
  const auto primes = prime_sieve(limit);
  std::vector<signed char> results(primes.size(), 0);  // trace or 3 = ramified
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size() || failed.load()) return;
      try {
        switch (q8_frobenius_at(src, primes[i])) {
          case FrobResult::Order1: results[i] = 2; break;
          case FrobResult::Order2: results[i] = -2; break;
          case FrobResult::Order4: results[i] = 0; break;
          case FrobResult::Ramified: results[i] = 3; break;
        }
      } catch (const NotGaloisConsistent& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failure = e.what();
        failed.store(true);
        return;
      }
    }
  };

  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(hw == 0 ? 1 : hw);
  }
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw NotGaloisConsistent(failure);

  EigenvalueStream s;
  s.source_id = src.id();
  s.weight = 1;
  s.limit = limit;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (results[i] == 3) continue;  // ramified, recorded by omission
    StreamEntry e;
    e.prime = primes[i];
    e.raw = {static_cast<double>(results[i]), 0.0};
    e.normalized = e.raw;
    e.exact_zero = results[i] == 0;
    s.entries.push_back(e);
  }
  s.validate();
  return s;
}

Q8Validation validate_q8(const ArtinQ8Source& src, std::int64_t limit,
                         double chi_square_threshold) {
  const EigenvalueStream s = q8_frobenius(src, limit);
  Q8Validation v;
  std::int64_t n1 = 0, n2 = 0, n4 = 0;
  for (const auto& e : s.entries) {
    if (e.exact_zero) ++n4;
    else if (e.raw.real() > 0) ++n1;
    else ++n2;
  }
  v.samples = n1 + n2 + n4;
  if (v.samples == 0) return v;
  const double n = static_cast<double>(v.samples);
  v.freq_order1 = n1 / n;
  v.freq_order2 = n2 / n;
  v.freq_order4 = n4 / n;
  const double e1 = n / 8.0, e2 = n / 8.0, e4 = 3.0 * n / 4.0;
  auto term = [](double obs, double exp) { return (obs - exp) * (obs - exp) / exp; };
  v.chi_square = term(double(n1), e1) + term(double(n2), e2) + term(double(n4), e4);
  v.ok = v.chi_square <= chi_square_threshold;
  return v;
}

}  // namespace lacunarity::sources
