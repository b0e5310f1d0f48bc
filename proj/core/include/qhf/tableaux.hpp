#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qhf/partition.hpp"

namespace qhf {

/// Content of a tableau: counts[i - 1] = number of entries equal to i.
using WeightVector = std::vector<int>;

/// Semistandard Young tableau; rows[i] holds the entries of row i + 1.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  bool is_semistandard() const;
  WeightVector weight(int max_entry) const;
};

/// Calls `visit(tableau, weight)` once per semistandard tableau of shape λ
/// with entries in {1..max_entry}. Columns are filled left to right and
/// each column top to bottom; prefixes that cannot be completed are pruned.
void enumerate_ssyt(const Partition& shape, int max_entry,
                    const std::function<void(const Tableau&, const WeightVector&)>& visit);

/// Multiplicity of each weight vector among the SSYT of shape λ, entries ≤ n.
std::map<WeightVector, std::int64_t> ssyt_weight_counts(const Partition& shape, int max_entry);

/// K_{λ,α} via the horizontal-strip recursion on the last nonzero entry of α.
std::int64_t kostka(const Partition& shape, const WeightVector& weight);

/// K_{λ,α} by brute-force enumeration of tableaux.
std::int64_t kostka_by_enumeration(const Partition& shape, const WeightVector& weight);

/// c_{λμ}^ν by counting Littlewood-Richardson fillings of ν/λ of content μ.
std::int64_t littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_λ s_μ = Σ_ν c_{λμ}^ν s_ν, all ν with nonzero coefficient.
std::map<Partition, std::int64_t> lr_expand(const Partition& lambda, const Partition& mu);

struct StraightenResult {
  int sign = 0;        // −1, 0 or +1
  Partition partition; // meaningful only when sign != 0
};

/// Rewrites s_v for an arbitrary integer index v as ±s_σ or 0 using
/// s_(…,a,b,…) = −s_(…,b−1,a+1,…).
StraightenResult straighten(const IntVector& v);

/// All ρ ⊆ λ such that λ/ρ is a horizontal strip with `size` boxes.
std::vector<Partition> horizontal_strips(const Partition& lambda, int size);
/// All ρ ⊆ λ such that λ/ρ is a vertical strip with `size` boxes.
std::vector<Partition> vertical_strips(const Partition& lambda, int size);

}  // namespace qhf
