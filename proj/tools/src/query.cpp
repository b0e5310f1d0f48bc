#include "query.hpp"

#include "cache.hpp"

namespace qhf::cli {

std::string partition_arg(const Partition& p) {
  std::string out;
  for (int x : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string cache_key(std::string_view verb, std::string_view alg, int n, int k, const Partition& lhs,
                      const Partition& rhs) {
  std::string key(kCacheVersion);
  for (std::string_view part : {verb, alg}) key.append("|").append(part);
  key += "|" + std::to_string(n) + "|" + std::to_string(k) + "|" + partition_arg(lhs) + "|" + partition_arg(rhs);
  return key;
}

}  // namespace qhf::cli
