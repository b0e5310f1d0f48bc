#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace qhf::cli {

inline constexpr std::string_view kCacheVersion = "qhf-cache-1";

std::uint64_t fnv1a(std::string_view text);

/// Append-only JSON-lines file mapping hashed query keys to serialized results.
/// Entries with another version tag are ignored.
class Cache {
 public:
  explicit Cache(std::string path);

  std::optional<std::string> get(std::string_view key) const;
  void put(std::string_view key, const std::string& value);

 private:
  std::string path_;
  std::map<std::string, std::pair<std::string, std::string>> entries_;  // hash → (query, value)
  mutable std::mutex mutex_;
};

}  // namespace qhf::cli
