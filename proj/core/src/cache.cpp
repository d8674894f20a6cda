#include "lacunarity/sources/cache.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lacunarity/errors.hpp"

namespace lacunarity::sources {

namespace {

std::string sanitize(const std::string& id) {
  std::string out;
  out.reserve(id.size());
  for (char c : id) {
    bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '-' || c == '.';
    out.push_back(keep ? c : '_');
  }
  // FNV-1a tag guards against sanitization collisions
  std::uint64_t h = 1469598103934665603ull;
  for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  char tag[20];
  std::snprintf(tag, sizeof tag, "-%08lx", static_cast<unsigned long>(h & 0xffffffffull));
  return out + tag;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_raw(const std::complex<double>& raw) {
  if (raw.imag() == 0.0 && raw.real() == std::floor(raw.real()) &&
      std::abs(raw.real()) < 9.0e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(raw.real()));
    return buf;
  }
  if (raw.imag() == 0.0) return format_double(raw.real());
  return format_double(raw.real()) + "," + format_double(raw.imag());
}

std::complex<double> parse_raw(const std::string& s) {
  std::size_t comma = s.find(',');
  if (comma == std::string::npos) return {std::strtod(s.c_str(), nullptr), 0.0};
  return {std::strtod(s.substr(0, comma).c_str(), nullptr),
          std::strtod(s.substr(comma + 1).c_str(), nullptr)};
}

struct Header {
  std::string source;
  int weight = 1;
  std::int64_t limit = 0;
};

bool parse_header(const std::string& line, Header& h) {
  if (line.rfind("#source=", 0) != 0) return false;
  std::size_t wpos = line.find(" weight=");
  std::size_t lpos = line.find(" limit=");
  if (wpos == std::string::npos || lpos == std::string::npos) return false;
  h.source = line.substr(8, wpos - 8);
  h.weight = std::atoi(line.c_str() + wpos + 8);
  h.limit = std::strtoll(line.c_str() + lpos + 7, nullptr, 10);
  return true;
}

}  // namespace

std::string cache_format_entry(const StreamEntry& e) {
  std::ostringstream os;
  os << e.prime << '\t' << format_raw(e.raw) << '\t' << format_double(e.normalized.real())
     << '\t' << format_double(e.normalized.imag()) << '\t' << (e.exact_zero ? 1 : 0);
  return os.str();
}

StreamCache::StreamCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
}

std::optional<EigenvalueStream> StreamCache::load(const std::string& source_id,
                                                  std::int64_t limit) const {
  std::error_code ec;
  if (!std::filesystem::exists(dir_, ec)) return std::nullopt;

  // any cached file for this id with limit >= requested can serve (by the
  // prefix property of prime-ordered streams)
  std::filesystem::path best;
  Header best_header;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".tsv") continue;
    std::ifstream in(entry.path());
    std::string line;
    if (!std::getline(in, line)) continue;
    Header h;
    if (!parse_header(line, h)) continue;
    if (h.source != source_id || h.limit < limit) continue;
    if (best.empty() || h.limit < best_header.limit) {
      best = entry.path();
      best_header = h;
    }
  }
  if (best.empty()) return std::nullopt;

  std::ifstream in(best);
  std::string line;
  std::getline(in, line);  // header
  EigenvalueStream s;
  s.source_id = source_id;
  s.weight = best_header.weight;
  s.limit = limit;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string p_s, raw_s, re_s, im_s, z_s;
    if (!std::getline(ls, p_s, '\t') || !std::getline(ls, raw_s, '\t') ||
        !std::getline(ls, re_s, '\t') || !std::getline(ls, im_s, '\t') ||
        !std::getline(ls, z_s, '\t'))
      throw CacheError("malformed cache record in " + best.string());
    StreamEntry e;
    e.prime = std::strtoll(p_s.c_str(), nullptr, 10);
    if (e.prime > limit) break;
    e.raw = parse_raw(raw_s);
    e.normalized = {std::strtod(re_s.c_str(), nullptr), std::strtod(im_s.c_str(), nullptr)};
    e.exact_zero = z_s == "1";
    s.entries.push_back(e);
  }
  s.validate();
  return s;
}

void StreamCache::store(const EigenvalueStream& stream) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  std::ostringstream name;
  name << sanitize(stream.source_id) << "__N" << stream.limit << ".tsv";
  const std::filesystem::path target = dir_ / name.str();
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file " + tmp.string());
    out << "#source=" << stream.source_id << " weight=" << stream.weight
        << " limit=" << stream.limit << "\n";
    for (const auto& e : stream.entries) out << cache_format_entry(e) << "\n";
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw CacheError("cannot finalize cache file " + target.string());
}

}  // namespace lacunarity::sources
