#include "qhf/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qhf {

bool Tableau::is_semistandard() const {
  if (rows.size() != shape.length()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape[i + 1]) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

WeightVector Tableau::weight(int max_entry) const {
  WeightVector w(static_cast<std::size_t>(max_entry), 0);
  for (const auto& row : rows)
    for (int e : row) {
      if (e < 1 || e > max_entry) throw std::out_of_range("tableau entry exceeds max_entry");
      ++w[e - 1];
    }
  return w;
}

void enumerate_ssyt(const Partition& shape, int max_entry,
                    const std::function<void(const Tableau&, const WeightVector&)>& visit) {
  if (max_entry < 0) throw std::invalid_argument("max_entry must be nonnegative");
  const int height = static_cast<int>(shape.length());
  if (height > max_entry) return;

  Tableau t{shape, {}};
  for (int i = 1; i <= height; ++i) t.rows.emplace_back(static_cast<std::size_t>(shape[i]), 0);
  WeightVector weight(static_cast<std::size_t>(max_entry), 0);
  const Partition columns = transpose(shape);
  const int width = shape[1];

  // Cells are visited column by column, top to bottom.
  auto fill = [&](auto&& self, int col, int row) -> void {
    if (col > width) {
      visit(t, weight);
      return;
    }
    const int col_height = columns[col];
    if (row > col_height) {
      self(self, col + 1, 1);
      return;
    }
    int lo = 1;
    if (col > 1) lo = t.rows[row - 1][col - 2];
    if (row > 1) lo = std::max(lo, t.rows[row - 2][col - 1] + 1);
    // The cells below in this column need distinct larger entries.
    const int hi = max_entry - (col_height - row);
    for (int e = lo; e <= hi; ++e) {
      t.rows[row - 1][col - 1] = e;
      ++weight[e - 1];
      self(self, col, row + 1);
      --weight[e - 1];
    }
  };
  fill(fill, 1, 1);
}

std::map<WeightVector, std::int64_t> ssyt_weight_counts(const Partition& shape, int max_entry) {
  std::map<WeightVector, std::int64_t> counts;
  enumerate_ssyt(shape, max_entry, [&](const Tableau&, const WeightVector& w) { ++counts[w]; });
  return counts;
}

namespace {

WeightVector trimmed(WeightVector w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
  return w;
}

std::int64_t kostka_rec(const Partition& shape, const WeightVector& w,
                        std::map<std::pair<Partition, WeightVector>, std::int64_t>& memo) {
  if (w.empty()) return shape.empty() ? 1 : 0;
  if (static_cast<int>(shape.length()) > static_cast<int>(w.size())) return 0;
  auto key = std::make_pair(shape, w);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  WeightVector rest(w.begin(), w.end() - 1);
  rest = trimmed(std::move(rest));
  std::int64_t total = 0;
  for (const auto& rho : horizontal_strips(shape, w.back())) total += kostka_rec(rho, rest, memo);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t kostka(const Partition& shape, const WeightVector& weight) {
  if (std::any_of(weight.begin(), weight.end(), [](int x) { return x < 0; })) return 0;
  if (std::accumulate(weight.begin(), weight.end(), 0) != shape.size()) return 0;
  std::map<std::pair<Partition, WeightVector>, std::int64_t> memo;
  return kostka_rec(shape, trimmed(weight), memo);
}

std::int64_t kostka_by_enumeration(const Partition& shape, const WeightVector& weight) {
  if (std::any_of(weight.begin(), weight.end(), [](int x) { return x < 0; })) return 0;
  if (std::accumulate(weight.begin(), weight.end(), 0) != shape.size()) return 0;
  WeightVector target = trimmed(weight);
  const int max_entry = static_cast<int>(target.size());
  target.resize(static_cast<std::size_t>(max_entry), 0);
  std::int64_t count = 0;
  enumerate_ssyt(shape, max_entry, [&](const Tableau&, const WeightVector& w) {
    if (w == target) ++count;
  });
  return count;
}

std::int64_t littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  const std::size_t rows = nu.length();
  if (lambda.length() > rows || mu.length() > rows) return 0;
  for (std::size_t i = 1; i <= rows; ++i)
    if (lambda[i] > nu[i] || mu[i] > nu[i]) return 0;
  if (mu.empty()) return 1;

  // Skew cells in reverse reading order: rows top to bottom, right to left.
  struct Cell {
    int row;
    int col;
  };
  std::vector<Cell> cells;
  for (int r = 1; r <= static_cast<int>(rows); ++r)
    for (int c = nu[r]; c > lambda[r]; --c) cells.push_back({r, c});

  const int letters = static_cast<int>(mu.length());
  std::vector<std::vector<int>> filling(rows + 1, std::vector<int>(static_cast<std::size_t>(nu[1]) + 2, 0));
  std::vector<int> content(static_cast<std::size_t>(letters) + 1, 0);
  std::int64_t count = 0;

  auto place = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    int hi = letters;
    if (c < nu[r]) hi = std::min(hi, filling[r][c + 1]);
    int lo = 1;
    if (r > 1 && c > lambda[r - 1]) lo = filling[r - 1][c] + 1;
    for (int e = lo; e <= hi; ++e) {
      if (content[e] >= mu[e]) continue;
      if (e > 1 && content[e] + 1 > content[e - 1]) continue;
      filling[r][c] = e;
      ++content[e];
      self(self, idx + 1);
      --content[e];
    }
    filling[r][c] = 0;
  };
  place(place, 0);
  return count;
}

std::map<Partition, std::int64_t> lr_expand(const Partition& lambda, const Partition& mu) {
  std::map<Partition, std::int64_t> out;
  const int size = lambda.size() + mu.size();
  const int rows = static_cast<int>(lambda.length() + mu.length());
  const int cols = lambda[1] + mu[1];
  for (const auto& nu : partitions_of(size, rows, cols)) {
    if (auto c = littlewood_richardson(lambda, mu, nu); c != 0) out.emplace(nu, c);
  }
  return out;
}

StraightenResult straighten(const IntVector& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> shifted(v.begin(), v.end());
  for (int i = 0; i < n; ++i) shifted[i] += n - 1 - i;
  // Sort descending, tracking the sign of the permutation by counting swaps.
  int sign = 1;
  for (int i = 1; i < n; ++i) {
    for (int j = i; j > 0 && shifted[j - 1] <= shifted[j]; --j) {
      if (shifted[j - 1] == shifted[j]) return {0, {}};
      std::swap(shifted[j - 1], shifted[j]);
      sign = -sign;
    }
  }
  for (int i = 0; i < n; ++i) shifted[i] -= n - 1 - i;
  if (n > 0 && shifted.back() < 0) return {0, {}};
  return {sign, Partition(std::move(shifted))};
}

std::vector<Partition> horizontal_strips(const Partition& lambda, int size) {
  std::vector<Partition> out;
  if (size < 0 || size > lambda.size()) return out;
  const int len = static_cast<int>(lambda.length());
  std::vector<int> rho(static_cast<std::size_t>(len), 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i > len) {
      if (remaining == 0) out.emplace_back(rho);
      return;
    }
    const int lo = lambda[i + 1];
    for (int part = lambda[i]; part >= lo; --part) {
      const int removed = lambda[i] - part;
      if (removed > remaining) break;
      rho[i - 1] = part;
      self(self, i + 1, remaining - removed);
    }
  };
  rec(rec, 1, size);
  return out;
}

std::vector<Partition> vertical_strips(const Partition& lambda, int size) {
  std::vector<Partition> out;
  if (size < 0 || size > static_cast<int>(lambda.length())) return out;
  const int len = static_cast<int>(lambda.length());
  std::vector<int> rho(static_cast<std::size_t>(len), 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i > len) {
      if (remaining == 0) out.emplace_back(rho);
      return;
    }
    const int cap = i > 1 ? rho[i - 2] : lambda[1];
    for (int drop = 0; drop <= std::min(1, remaining); ++drop) {
      const int part = lambda[i] - drop;
      if (part > cap) continue;
      rho[i - 1] = part;
      self(self, i + 1, remaining - drop);
    }
  };
  rec(rec, 1, size);
  return out;
}

}  // namespace qhf
