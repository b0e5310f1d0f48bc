#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qhf {

/// Weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. The empty sequence is the empty partition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Parts without trailing zeros.
  const std::vector<int>& parts() const { return parts_; }

  /// i-th part, 1-based; zero beyond the length.
  int operator[](std::size_t i) const {
    return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
  }

  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;  // |λ|

  /// Parts zero-padded (or truncated, if longer) to exactly `len` entries.
  std::vector<int> padded(std::size_t len) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// n × k bounding box; N = n + k sites on the circle.
struct Box {
  int n = 0;
  int k = 0;

  Box() = default;
  Box(int rows, int cols);

  int sites() const { return n + k; }
  bool contains(const Partition& p) const {
    return static_cast<int>(p.length()) <= n && p[1] <= k;
  }
  void require(const Partition& p) const;

  auto operator<=>(const Box&) const = default;
};

/// Fixed-length 01-word with positions numbered 1..N from the left.
class BitWord {
 public:
  static constexpr int kMaxLength = 62;

  BitWord() = default;
  explicit BitWord(int length, std::uint64_t bits = 0);
  static BitWord from_string(const std::string& s);
  static BitWord from_sites(int length, std::span<const int> sites);

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool at(int pos) const { return (bits_ >> (pos - 1)) & 1U; }
  int particles() const;
  /// Number of 1-letters in positions 1..a (n_a(w)); a is clamped to [0, N].
  int count_upto(int a) const;

  BitWord with(int pos, bool value) const;
  /// Particle positions ℓ_1 > ℓ_2 > … > ℓ_n.
  std::vector<int> positions() const;

  std::string to_string() const;

  auto operator<=>(const BitWord&) const = default;

 private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BitWord& w);

/// Integer vector used for non-partition Schur indices.
using IntVector = std::vector<int>;

/// Parses "3,2,1" (empty string = ∅). Rejects negative or increasing entries.
Partition parse_partition(const std::string& text);

/// ℓ_i(λ) = λ_i + n + 1 − i for i = 1..n.
std::vector<int> particle_positions(const Partition& p, int n);

BitWord word_of_partition(const Partition& p, const Box& box);
Partition partition_of_word(const BitWord& w);

Partition transpose(const Partition& p);
Partition complement(const Partition& p, const Box& box);

/// Removes all columns of height n (λ').
Partition column_reduce(const Partition& p, int n);
/// Removes all rows of length k (λ'').
Partition row_reduce(const Partition& p, int k);

/// Number of columns of height n in λ (λ_n, with λ of length ≤ n).
int full_columns(const Partition& p, int n);

/// The order-n rotation on 𝔓_{≤n−1,k}: add a top row of width k, then remove
/// all columns of height n. Negative counts are taken modulo n.
Partition rot(const Partition& p, int n, int k, int count = 1);

/// The order-N rotation on 𝔓_{≤n,k}: one step is the left cyclic shift of
/// the 01-word. Negative counts are taken modulo N.
Partition big_rot(const Partition& p, const Box& box, int count = 1);

/// n_a(w(λ)).
int n_counter(const Partition& p, const Box& box, int a);

/// All partitions fitting the box, ordered by size then lexicographically.
std::vector<Partition> partitions_in_box(const Box& box);

/// Partitions of `size` with at most `rows` parts and parts at most `cols`.
std::vector<Partition> partitions_of(int size, int rows, int cols);

std::uint64_t binomial(int n, int r);

}  // namespace qhf
