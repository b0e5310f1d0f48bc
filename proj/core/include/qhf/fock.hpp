#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <string>

#include "qhf/partition.hpp"

namespace qhf {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with integer coefficients; zero coefficients are never stored.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long long constant);  // NOLINT(google-explicit-constructor)
  static QPoly monomial(int degree, BigInt coeff = 1);

  const std::map<int, BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int degree) const;
  bool is_zero() const { return coeffs_.empty(); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  /// Multiplies by sign · q^shift.
  QPoly shifted(int shift, int sign = 1) const;
  /// q → −q.
  QPoly negate_q() const;

  std::string to_string() const;
  bool operator==(const QPoly&) const = default;

 private:
  void add(int degree, const BigInt& c);
  std::map<int, BigInt> coeffs_;
};

/// Finite linear combination of 01-words of one length and particle number.
class FockState {
 public:
  FockState() = default;
  explicit FockState(const BitWord& w, QPoly coeff = 1);

  const std::map<BitWord, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QPoly coeff(const BitWord& w) const;

  void add(const BitWord& w, const QPoly& c);
  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  /// Multiplies every coefficient by sign · q^shift.
  FockState scaled(int shift, int sign = 1) const;

  /// Signed q-monomials times words, e.g. "q·0110 - 2·1010"; "0" for the zero state.
  std::string to_string() const;
  /// Same as to_string with one ASCII Young diagram per term.
  std::string to_diagram_string(int n) const;

  bool operator==(const FockState&) const = default;

 private:
  std::map<BitWord, QPoly> terms_;
};

/// Linear map on states, given by its action on a single basis word.
using Operator = std::function<FockState(const FockState&)>;

/// Applies a map defined on basis words linearly.
FockState apply_linear(const FockState& s, const std::function<FockState(const BitWord&)>& on_word);

/// ψ*_i: creates a particle at site i with sign (−1)^{n_{i−1}(w)}.
FockState apply_create(int site, const FockState& s);
/// ψ_i: annihilates the particle at site i with sign (−1)^{n_{i−1}(w)}.
FockState apply_annihilate(int site, const FockState& s);

enum class Flavor { create, annihilate };

/// Creation/annihilation operator whose site may exceed N.
struct OperatorKind {
  Flavor flavor = Flavor::create;
  bool barred = false;
  int site = 1;
};

/// Applies ψ*_{i+N} = (−1)^{n̂+1} q ψ*_i (barred: (−1)^{n̂} q ψ̄*_i), n̂ being
/// the particle number after the creation. Sites in [N+1, 2N) wrap once.
/// Annihilators above N are rejected.
FockState apply_extended(const OperatorKind& op, const FockState& s);

/// u_i = ψ*_{i+1} ψ_i for i < N, u_N = (−1)^{n̂−1} q ψ*_1 ψ_N.
/// With negate_q the letter uses −q (the barred algebra).
FockState nil_tl_letter(int i, const FockState& s, bool negate_q = false);

/// Noncommutative elementary polynomial e_r (counterclockwise products), 0 ≤ r ≤ N.
FockState nc_elementary(int r, const FockState& s, bool negate_q = false);
/// Noncommutative complete polynomial h_r (clockwise products), 0 ≤ r ≤ N.
FockState nc_complete(int r, const FockState& s, bool negate_q = false);

/// s_λ = det(e_{λ^t_i − i + j}).
FockState nc_schur(const Partition& lambda, const FockState& s, bool negate_q = false);
/// s_λ = det(h_{λ_i − i + j}).
FockState nc_schur_h(const Partition& lambda, const FockState& s, bool negate_q = false);

/// λ ⋆ μ = Σ_T ψ*_{ℓ_n(μ)+t_n} ψ̄*_{ℓ_{n−1}(μ)+t_{n−1}} ⋯ ∅, as a state in 𝔉_{n,N}[q].
FockState star_fermionic(const Partition& lambda, const Partition& mu, const Box& box);

/// Checks s_λ ψ*_i = Σ_r ψ*_{i+r} Σ_{λ/μ=(r)} s̄_μ on every basis word of length N.
bool commutation_check(const Partition& lambda, int site, int length);

/// Every 01-word of the given length and particle number.
std::vector<BitWord> basis_words(int length, int particles);
/// Every 01-word of the given length.
std::vector<BitWord> all_words(int length);

/// Multi-line ASCII Young diagram of λ drawn in a box, followed by its 01-word.
std::string render_young_diagram(const Partition& lambda, const Box& box);

}  // namespace qhf
