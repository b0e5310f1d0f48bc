#pragma once

#include <string>
#include <string_view>

#include "qhf/partition.hpp"

namespace qhf::cli {

/// "3,1"; empty for ∅.
std::string partition_arg(const Partition& p);

std::string cache_key(std::string_view verb, std::string_view alg, int n, int k, const Partition& lhs,
                      const Partition& rhs);

}  // namespace qhf::cli
