#pragma once

#include <filesystem>
#include <optional>

#include "lacunarity/sources/stream.hpp"

namespace lacunarity::sources {

/// Append-only stream cache keyed by (source-id, limit).  One TSV file per
/// stream: a header line `#source=<id> weight=<w> limit=<N>` followed by
/// sorted records `p<TAB>raw<TAB>norm_re<TAB>norm_im<TAB>zero_flag`.
class StreamCache {
 public:
  explicit StreamCache(std::filesystem::path dir);

  /// A cached stream for the id covering at least `limit` (truncated down to
  /// the requested bound when a larger cache exists).
  std::optional<EigenvalueStream> load(const std::string& source_id, std::int64_t limit) const;

  void store(const EigenvalueStream& stream) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

std::string cache_format_entry(const StreamEntry& e);

}  // namespace lacunarity::sources
