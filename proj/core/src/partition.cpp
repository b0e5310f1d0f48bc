#include "qhf/partition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qhf {

namespace {

void trim(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition is not weakly decreasing");
  }
  trim(parts_);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(std::size_t len) const {
  std::vector<int> out(len, 0);
  std::copy_n(parts_.begin(), std::min(len, parts_.size()), out.begin());
  return out;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Box::Box(int rows, int cols) : n(rows), k(cols) {
  if (n < 0 || k < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  if (n + k < 1) throw std::invalid_argument("box must have at least one site");
  if (n + k > BitWord::kMaxLength) throw std::invalid_argument("box too large");
}

void Box::require(const Partition& p) const {
  if (!contains(p)) {
    std::ostringstream os;
    os << "partition " << p << " does not fit the " << n << "x" << k << " box";
    throw std::invalid_argument(os.str());
  }
}

BitWord::BitWord(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length < 0 || length > kMaxLength) throw std::invalid_argument("word length out of range");
  if (length < 64 && (bits >> length) != 0) throw std::invalid_argument("bits beyond word length");
}

BitWord BitWord::from_string(const std::string& s) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= std::uint64_t{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("01-word contains a letter other than 0 or 1");
  }
  return BitWord(static_cast<int>(s.size()), bits);
}

BitWord BitWord::from_sites(int length, std::span<const int> sites) {
  std::uint64_t bits = 0;
  for (int s : sites) {
    if (s < 1 || s > length) throw std::invalid_argument("site outside word");
    bits |= std::uint64_t{1} << (s - 1);
  }
  return BitWord(length, bits);
}

int BitWord::particles() const { return std::popcount(bits_); }

int BitWord::count_upto(int a) const {
  if (a <= 0) return 0;
  if (a >= length_) return particles();
  return std::popcount(bits_ & ((std::uint64_t{1} << a) - 1));
}

BitWord BitWord::with(int pos, bool value) const {
  std::uint64_t mask = std::uint64_t{1} << (pos - 1);
  return BitWord(length_, value ? (bits_ | mask) : (bits_ & ~mask));
}

std::vector<int> BitWord::positions() const {
  std::vector<int> out;
  for (int pos = length_; pos >= 1; --pos)
    if (at(pos)) out.push_back(pos);
  return out;
}

std::string BitWord::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int pos = 1; pos <= length_; ++pos)
    if (at(pos)) s[pos - 1] = '1';
  return s;
}

std::ostream& operator<<(std::ostream& os, const BitWord& w) { return os << w.to_string(); }

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition entry '" + item + "'");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw std::invalid_argument("malformed partition entry '" + item + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

std::vector<int> particle_positions(const Partition& p, int n) {
  if (static_cast<int>(p.length()) > n) throw std::invalid_argument("partition longer than n");
  std::vector<int> ell(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) ell[i - 1] = p[i] + n + 1 - i;
  return ell;
}

BitWord word_of_partition(const Partition& p, const Box& box) {
  box.require(p);
  auto ell = particle_positions(p, box.n);
  return BitWord::from_sites(box.sites(), ell);
}

Partition partition_of_word(const BitWord& w) {
  auto ell = w.positions();
  int n = static_cast<int>(ell.size());
  std::vector<int> parts(ell.size());
  for (int i = 1; i <= n; ++i) parts[i - 1] = ell[i - 1] - n - 1 + i;
  return Partition(std::move(parts));
}

Partition transpose(const Partition& p) {
  std::vector<int> t(static_cast<std::size_t>(p[1]), 0);
  for (int j = 1; j <= p[1]; ++j) {
    int c = 0;
    while (p[c + 1] >= j) ++c;
    t[j - 1] = c;
  }
  return Partition(std::move(t));
}

Partition complement(const Partition& p, const Box& box) {
  box.require(p);
  std::vector<int> c(static_cast<std::size_t>(box.n));
  for (int i = 1; i <= box.n; ++i) c[i - 1] = box.k - p[box.n + 1 - i];
  return Partition(std::move(c));
}

int full_columns(const Partition& p, int n) {
  if (static_cast<int>(p.length()) > n) throw std::invalid_argument("partition longer than n");
  return n == 0 ? 0 : p[n];
}

Partition column_reduce(const Partition& p, int n) {
  int m = full_columns(p, n);
  if (m == 0) return p;
  std::vector<int> out(p.parts());
  for (auto& x : out) x -= m;
  return Partition(std::move(out));
}

Partition row_reduce(const Partition& p, int k) {
  if (p[1] > k) throw std::invalid_argument("partition wider than k");
  std::vector<int> out;
  for (int x : p.parts())
    if (x != k) out.push_back(x);
  return Partition(std::move(out));
}

Partition rot(const Partition& p, int n, int k, int count) {
  if (n < 1) throw std::invalid_argument("rot needs n >= 1");
  if (static_cast<int>(p.length()) > n - 1 || p[1] > k)
    throw std::invalid_argument("rot expects a partition in the (n-1) x k box");
  Partition cur = p;
  for (int step = mod(count, n); step > 0; --step) {
    std::vector<int> parts{k};
    parts.insert(parts.end(), cur.parts().begin(), cur.parts().end());
    cur = column_reduce(Partition(std::move(parts)), n);
  }
  return cur;
}

Partition big_rot(const Partition& p, const Box& box, int count) {
  const int len = box.sites();
  BitWord w = word_of_partition(p, box);
  int shift = mod(count, len);
  if (shift == 0) return p;
  std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
  // Left rotation of the word: letter at position i moves to i - 1, position 1 wraps to N.
  std::uint64_t b = w.bits();
  std::uint64_t rotated = ((b >> shift) | (b << (len - shift))) & mask;
  return partition_of_word(BitWord(len, rotated));
}

int n_counter(const Partition& p, const Box& box, int a) {
  if (a < 0 || a > box.sites()) throw std::invalid_argument("counter position out of range");
  return word_of_partition(p, box).count_upto(a);
}

std::vector<Partition> partitions_of(int size, int rows, int cols) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == rows) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, size, cols);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_in_box(const Box& box) {
  std::vector<Partition> out;
  for (int s = 0; s <= box.n * box.k; ++s) {
    auto layer = partitions_of(s, box.n, box.k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

}  // namespace qhf
