#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qhf::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 2;
inline constexpr int kCrossCheckFailure = 3;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default cache path, from QHF_CACHE.
std::optional<std::string> default_cache_path();

struct VerifyOptions {
  int max_sites = 6;
  int jobs = 1;
  bool numeric = false;
  std::optional<std::string> cache_path;
};

struct VerifyReport {
  std::uint64_t queries = 0;
  std::uint64_t failures = 0;
  /// The first failing query in enumeration order (N, n, λ, μ).
  std::string minimal_failure;
};

/// Exhaustive cross-algorithm agreement for every box and level with 2 ≤ n + k ≤ max_sites
/// (boxes start at N = 1).
VerifyReport verify(const VerifyOptions& opts);

}  // namespace qhf::cli
