#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qhf/fock.hpp"
#include "qhf/partition.hpp"
#include "qhf/qh_ring.hpp"

namespace qhf {

/// The sl(n)^_k Verlinde algebra; its basis is 𝔓_{≤n−1,k}.
struct FusionLevel {
  int n = 1;  // rank
  int k = 0;  // level

  FusionLevel() = default;
  FusionLevel(int rank, int level);

  int sites() const { return n + k; }
  Box box() const { return Box(n - 1, k); }
  /// The Grassmannian box n × k the ring is a quotient of.
  Box qh_box() const { return Box(n, k); }
  bool contains(const Partition& p) const { return box().contains(p); }
  void require(const Partition& p) const;
  FusionLevel dual() const { return FusionLevel(k, n); }
};

/// Dynkin labels (m_0, …, m_{n−1}) of a dominant integral weight.
struct AffineWeight {
  std::vector<int> labels;

  int level() const;
  bool operator==(const AffineWeight&) const = default;
};

AffineWeight partition_to_weight(const Partition& lambda, const FusionLevel& lv);
Partition weight_to_partition(const AffineWeight& w);

struct FusionExpansion {
  FusionLevel level;
  std::map<Partition, BigInt> terms;

  void add(const Partition& nu, const BigInt& c);
  BigInt coeff(const Partition& nu) const;
  /// "[4,2] + [3,3] + [3] + 2[2,1] + []": ν in descending order.
  std::string to_string() const;
  bool operator==(const FusionExpansion& o) const { return terms == o.terms && level.n == o.level.n && level.k == o.level.k; }
};

enum class FusionAlgorithm {
  projection,
  lift,
  kac_walton,
  racah_speiser,
  recursion,
  dual_racah_speiser,
  projected_dual_rim_hook,
  verlinde,
};

/// Every exact algorithm (all but verlinde).
inline constexpr FusionAlgorithm kExactFusionAlgorithms[] = {
    FusionAlgorithm::projection,         FusionAlgorithm::lift,
    FusionAlgorithm::kac_walton,         FusionAlgorithm::racah_speiser,
    FusionAlgorithm::recursion,          FusionAlgorithm::dual_racah_speiser,
    FusionAlgorithm::projected_dual_rim_hook};

std::string_view to_string(FusionAlgorithm alg);
FusionAlgorithm parse_fusion_algorithm(std::string_view name);

/// d̂ = (|λ|+|μ|−|ν|)/n, or −1 when it is not a nonnegative integer.
int fusion_degree(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv);

/// Full expansion of λ ∗ μ.
FusionExpansion fusion_product(const Partition& lambda, const Partition& mu, const FusionLevel& lv,
                               FusionAlgorithm alg = FusionAlgorithm::kac_walton);
/// One fusion coefficient 𝒩_{λμ}^ν.
BigInt fusion_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv,
                          FusionAlgorithm alg = FusionAlgorithm::kac_walton);

/// Projects σ_λ ⋆ σ_μ (λ, μ in the n × k box): (ν, d, c) ↦ c·rot^d(ν′).
FusionExpansion fusion_by_projection(const Partition& lambda, const Partition& mu, const FusionLevel& lv,
                                     GWAlgorithm alg = GWAlgorithm::fermionic);
/// Projects an already computed quantum product.
FusionExpansion project_expansion(const QExpansion& e, const FusionLevel& lv);

/// 𝒩_{λμ}^ν = C_{λμ}^{Rot^{−d̂}(ν), d}.
BigInt fusion_by_lift(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv,
                      GWAlgorithm alg = GWAlgorithm::racah_speiser);

/// Shifted affine Weyl reflections into the fundamental alcove.
BigInt kac_walton(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv);
FusionExpansion kac_walton_expansion(const Partition& lambda, const Partition& mu, const FusionLevel& lv);

/// Reflects σ̂ + ρ̂ into the alcove; sign 0 on a wall, else ±1 with the image.
struct AlcoveImage {
  int sign = 0;
  Partition image;
};
AlcoveImage reduce_to_alcove(const Partition& sigma, const FusionLevel& lv);

/// Alternating Kostka sum over permutations, positions shifted by d̂.
BigInt fusion_racah_speiser(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv);

enum class RecursionDirection { lower_n, raise_n };

/// Rank recursion. lower_n bottoms out at the n = 2 closed form, raise_n at k = 0.
/// `site` = 0 picks the smallest admissible j.
BigInt fusion_recursion(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv,
                        RecursionDirection dir = RecursionDirection::lower_n, int site = 0);

/// One summand of the lower_n recursion, for inspection.
struct RecursionTerm {
  int r = 0;
  Partition rho;         // ρ′
  Partition mu_reduced;  // (ψ_j μ)′
  Partition nu_reduced;  // rot^{d′_r}(ψ_{j+r} σ)′
  int sign = 1;
  BigInt value;          // 𝒩(n−1, k+1) of the reduced triple
};
std::vector<RecursionTerm> lower_n_terms(const Partition& lambda, const Partition& mu, const Partition& nu,
                                         const FusionLevel& lv, int site);
/// Sites j with ψ_j(w(μ)) ≠ 0 (lower_n) or ψ*_j(w(μ)) ≠ 0 (raise_n).
std::vector<int> admissible_sites(const Partition& mu, const FusionLevel& lv, RecursionDirection dir);

/// n = 2: 1 iff |a−b| ≤ c ≤ min(a+b, 2k−a−b) and a+b+c is even.
BigInt fusion_sl2(int a, int b, int c, int k);

/// 𝒩̃ in sl(k)^_n of the level-rank dual triple.
BigInt level_rank(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv,
                  FusionAlgorithm alg = FusionAlgorithm::kac_walton);
/// (λ^t)′ in 𝔓_{≤k−1,n}.
Partition level_rank_image(const Partition& lambda, const FusionLevel& lv);

/// Transposed LR expansion reduced by the phase-model rule.
FusionExpansion fusion_dual_rs(const Partition& lambda, const Partition& mu, const FusionLevel& lv);
/// LR expansion with n-columns removed, reduced by the modular rule and rot^d.
FusionExpansion fusion_projected_dual_rim_hook(const Partition& lambda, const Partition& mu, const FusionLevel& lv);

/// A reduced Schur index: s_v = sign · s_{shape} (sign 0 when it vanishes).
struct ReducedSchur {
  int sign = 0;
  int degree = 0;
  Partition shape;
};
/// Phase-model reduction of s_{ρ^t} used by fusion_dual_rs: returns ν^t before row removal.
ReducedSchur dual_rs_reduce(const Partition& rho_t, const FusionLevel& lv);

/// Exponent convention for the phase ζ^{c|σ|} in the Verlinde sum.
enum class VerlindePhase { per_rank, as_printed };

/// Verlinde sum; throws std::runtime_error when it is not within 1e−6 of an integer.
NumericValue verlinde_numeric(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv,
                              VerlindePhase phase = VerlindePhase::per_rank);
/// The raw complex Verlinde sum without the integrality check.
std::complex<double> verlinde_sum(const Partition& lambda, const Partition& mu, const Partition& nu,
                                  const FusionLevel& lv, VerlindePhase phase);

}  // namespace qhf
