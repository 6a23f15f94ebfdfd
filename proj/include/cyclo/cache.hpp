#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>

namespace cyclo {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// One line of the cache file. Heights do not depend on which witness prime
/// represents a Kaplan class, so the key is (p, q, residue) alone.
struct CacheRecord {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t residue = 0;
  std::int64_t witness = 0;
  std::int64_t height = 0;
  std::int64_t smallest_k = 0;
  std::int64_t value_at_k = 0;
  std::string tool_version{kToolVersion};

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

/// Serialized as a single-line JSON object without a trailing newline.
std::string to_cache_line(const CacheRecord& record);

/// Empty optional for anything that is not a complete record.
std::optional<CacheRecord> parse_cache_line(std::string_view line);

/// Path named by the CYCLO_CACHE environment variable, if set and non-empty.
std::optional<std::filesystem::path> cache_path_from_env();

/// Append-only height cache. Reads may run concurrently; writes serialize.
/// Without a path the cache lives in memory only.
class HeightCache {
 public:
  HeightCache() = default;

  /// Loads an existing file; unparseable lines are skipped and reported to
  /// `warnings` (pass nullptr to silence).
  explicit HeightCache(std::filesystem::path path, std::ostream* warnings = nullptr);

  std::optional<CacheRecord> find(std::int64_t p, std::int64_t q, std::int64_t residue) const;

  /// Inserts the record unless its key is already present; new records are
  /// appended to the backing file.
  void store(const CacheRecord& record);

  std::size_t size() const;
  std::size_t skipped_lines() const { return skipped_; }
  const std::optional<std::filesystem::path>& path() const { return path_; }

 private:
  using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

  std::optional<std::filesystem::path> path_;
  std::map<Key, CacheRecord> records_;
  std::size_t skipped_ = 0;
  mutable std::shared_mutex mutex_;
};

}  // namespace cyclo
