#include "cyclo/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>

#include <json.hpp>

#include "cyclo/error.hpp"

namespace cyclo {

using nlohmann::json;

std::string to_cache_line(const CacheRecord& r) {
  // ordered_json keeps the documented field order stable in the file.
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["residue"] = r.residue;
  j["witness"] = r.witness;
  j["height"] = r.height;
  j["smallest_k"] = r.smallest_k;
  j["value_at_k"] = r.value_at_k;
  j["tool_version"] = r.tool_version;
  return j.dump();
}

std::optional<CacheRecord> parse_cache_line(std::string_view line) {
  const json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (!j.is_object()) return std::nullopt;
  CacheRecord r;
  for (auto [key, field] : {std::pair{"p", &r.p}, {"q", &r.q}, {"residue", &r.residue},
                            {"witness", &r.witness}, {"height", &r.height},
                            {"smallest_k", &r.smallest_k}, {"value_at_k", &r.value_at_k}}) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer()) return std::nullopt;
    *field = it->get<std::int64_t>();
  }
  auto v = j.find("tool_version");
  if (v == j.end() || !v->is_string()) return std::nullopt;
  r.tool_version = v->get<std::string>();
  if (r.p < 3 || r.q <= r.p || r.residue < 1 || r.height < 1) return std::nullopt;
  return r;
}

std::optional<std::filesystem::path> cache_path_from_env() {
  const char* env = std::getenv("CYCLO_CACHE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

HeightCache::HeightCache(std::filesystem::path path, std::ostream* warnings) : path_(std::move(path)) {
  std::ifstream in(*path_);
  if (!in) return;  // a missing file is an empty cache
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto record = parse_cache_line(line);
    if (!record) {
      ++skipped_;
      if (warnings)
        *warnings << "warning: " << path_->string() << ":" << line_no
                  << ": skipping corrupt cache line\n";
      continue;
    }
    records_.try_emplace(Key{record->p, record->q, record->residue}, *record);
  }
}

std::optional<CacheRecord> HeightCache::find(std::int64_t p, std::int64_t q, std::int64_t residue) const {
  std::shared_lock lock(mutex_);
  auto it = records_.find(Key{p, q, residue});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void HeightCache::store(const CacheRecord& record) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = records_.try_emplace(Key{record.p, record.q, record.residue}, record);
  if (!inserted || !path_) return;
  std::ofstream out(*path_, std::ios::app);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot append to cache file " + path_->string());
  out << to_cache_line(record) << '\n';
}

std::size_t HeightCache::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

}  // namespace cyclo
