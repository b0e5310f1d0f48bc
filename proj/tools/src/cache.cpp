#include "cache.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace qhf::cli {

namespace {

std::string hex_key(std::string_view key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return buf;
}

}  // namespace

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Cache::Cache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    if (j.value("version", "") != kCacheVersion) continue;
    if (!j.contains("key") || !j.contains("query") || !j.contains("value") || !j["value"].is_string()) continue;
    entries_[j["key"].get<std::string>()] = {j["query"].get<std::string>(), j["value"].get<std::string>()};
  }
}

std::optional<std::string> Cache::get(std::string_view key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(hex_key(key));
  // A hash collision with another query counts as a miss.
  if (it == entries_.end() || it->second.first != key) return std::nullopt;
  return it->second.second;
}

void Cache::put(std::string_view key, const std::string& value) {
  std::lock_guard lock(mutex_);
  const auto hk = hex_key(key);
  auto it = entries_.find(hk);
  if (it != entries_.end() && it->second.first == key && it->second.second == value) return;
  entries_[hk] = {std::string(key), value};
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot write cache file " + path_);
  out << nlohmann::json{{"version", kCacheVersion}, {"key", hk}, {"query", key}, {"value", value}}.dump() << '\n';
}

}  // namespace qhf::cli
