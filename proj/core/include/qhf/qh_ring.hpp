#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qhf/fock.hpp"
#include "qhf/partition.hpp"

namespace qhf {

/// σ_λ ⋆ σ_μ = Σ_{ν,d} q^d C^{ν,d} σ_ν inside one box.
struct QExpansion {
  Box box;
  std::map<Partition, QPoly> terms;

  void add(const Partition& nu, int degree, const BigInt& coeff);
  BigInt coeff(const Partition& nu, int degree) const;
  /// "q[2] + q[1,1] + [4,4,1] + 2[4,3,2]": terms by descending degree, then ν descending.
  std::string to_string() const;
  bool operator==(const QExpansion&) const = default;
};

struct GWQuery {
  Partition lambda;
  Partition mu;
  Partition nu;
  int d = 0;
  Box box;
};

enum class GWAlgorithm { fermionic, racah_speiser, vev, rim_hook, dual_rim_hook, bvi };

/// Every exact algorithm (all but bvi).
inline constexpr GWAlgorithm kExactGWAlgorithms[] = {GWAlgorithm::fermionic, GWAlgorithm::racah_speiser,
                                                    GWAlgorithm::vev, GWAlgorithm::rim_hook,
                                                    GWAlgorithm::dual_rim_hook};

std::string_view to_string(GWAlgorithm alg);
GWAlgorithm parse_gw_algorithm(std::string_view name);

/// The degree for which |λ|+|μ|−|ν| = dN, or −1 when there is none.
int gw_degree(const Partition& lambda, const Partition& mu, const Partition& nu, const Box& box);

QExpansion qh_product(const Partition& lambda, const Partition& mu, const Box& box,
                      GWAlgorithm alg = GWAlgorithm::fermionic);

/// Converts a state of star_fermionic into an expansion.
QExpansion expansion_of_state(const FockState& s, const Box& box);

/// Alternating sum of Kostka numbers over permutations of the particle positions.
BigInt gw_racah_speiser(const GWQuery& q);
/// Matrix elements of fermion products, indices taken modulo N.
BigInt gw_vev(const GWQuery& q);
/// Signed LR coefficients of shapes obtained by adding d rim hooks of N cells to ν.
BigInt gw_rim_hook(const GWQuery& q);
/// Shapes reached from ν by adding `hooks` rim hooks of N cells each ending in
/// column 1, with ρ_1 ≤ k, mapped to their sign Π(−1)^{k − width}.
std::map<Partition, int> rim_hook_shapes(const Partition& nu, int hooks, const Box& box);
/// LR expansion reduced into the box by the modular rule and straightening.
QExpansion gw_dual_rim_hook(const Partition& lambda, const Partition& mu, const Box& box);
/// One coefficient of the fermionic product.
BigInt gw_fermionic(const GWQuery& q);
/// Any exact algorithm on one query.
BigInt gw_invariant(const GWQuery& q, GWAlgorithm alg);

struct NumericValue {
  std::complex<double> value;
  long long rounded = 0;
};

/// Residue sum over the points ζ^{I(σ)}, σ in the box. Throws std::runtime_error
/// when the sum is not within 1e−6 of an integer.
NumericValue bvi_numeric(const GWQuery& q);

BigInt extract_gw(const QExpansion& e, const Partition& nu, int degree);

/// s_λ(x_1, …, x_m); bialternant with an SSYT fallback for tiny pivots.
std::complex<double> evaluate_schur(const Partition& lambda, const std::vector<std::complex<double>>& x);

/// I(σ) for σ with at most `rows` parts: I_j = (rows+1)/2 + σ_{rows+1−j} − (rows+1−j).
std::vector<double> i_map(const Partition& sigma, int rows);

/// Points ζ^{sign·I_j}, ζ = exp(2πi/N).
std::vector<std::complex<double>> root_points(const std::vector<double>& exponents, int sites, int sign);

/// |s_λ(ζ^{I(σ)}) − s_{λ^t}(ζ^{−I(σ^t)})|.
double technical_lemma_residual(const Partition& lambda, const Partition& sigma, const Box& box);

}  // namespace qhf
