#pragma once

#include <string>
#include <string_view>

#include "qhf/fusion_ring.hpp"
#include "qhf/partition.hpp"
#include "qhf/qh_ring.hpp"

namespace qhf {

/// Compact single-line JSON. Terms are ordered by degree, then ν ascending.
/// Coefficients are JSON integers when they fit 64 bits and decimal strings otherwise.
std::string to_json(const Partition& p);
std::string to_json(const QExpansion& e);
std::string to_json(const FusionExpansion& e);
std::string to_json(const AffineWeight& w);

/// Inverses of to_json; throw std::invalid_argument on malformed input.
Partition partition_from_json(std::string_view text);
QExpansion qexpansion_from_json(std::string_view text);
FusionExpansion fusion_expansion_from_json(std::string_view text);

}  // namespace qhf
