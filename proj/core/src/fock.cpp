#include "qhf/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qhf/tableaux.hpp"

namespace qhf {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(long long constant) {
  if (constant != 0) coeffs_.emplace(0, BigInt(constant));
}

QPoly QPoly::monomial(int degree, BigInt coeff) {
  if (degree < 0) throw std::invalid_argument("negative q-degree");
  QPoly p;
  p.add(degree, coeff);
  return p;
}

BigInt QPoly::coeff(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void QPoly::add(int degree, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [d, c] : o.coeffs_) add(d, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [d, c] : o.coeffs_) add(d, -c);
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out;
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, -c);
  return out;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) out.add(da + db, ca * cb);
  return out;
}

QPoly QPoly::shifted(int shift, int sign) const {
  QPoly out;
  for (const auto& [d, c] : coeffs_) {
    if (d + shift < 0) throw std::invalid_argument("negative q-degree");
    out.coeffs_.emplace(d + shift, sign < 0 ? BigInt(-c) : c);
  }
  return out;
}

QPoly QPoly::negate_q() const {
  QPoly out;
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, d % 2 ? BigInt(-c) : c);
  return out;
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "q";
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

// ---------------------------------------------------------------- FockState

FockState::FockState(const BitWord& w, QPoly coeff) { add(w, coeff); }

QPoly FockState::coeff(const BitWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QPoly{} : it->second;
}

void FockState::add(const BitWord& w, const QPoly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty()) {
    const BitWord& ref = terms_.begin()->first;
    if (ref.length() != w.length() || ref.particles() != w.particles())
      throw std::invalid_argument("FockState terms must share length and particle number");
  }
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockState& FockState::operator+=(const FockState& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FockState FockState::scaled(int shift, int sign) const {
  FockState out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c.shifted(shift, sign));
  return out;
}

namespace {

std::string coeff_prefix(const QPoly& c, bool first) {
  std::string body = c.to_string();
  bool single = c.coeffs().size() == 1;
  if (single) {
    bool negative = c.coeffs().begin()->second < 0;
    if (negative) body.erase(0, 1);
    std::string sign = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (body == "1") return sign;
    return sign + body + "·";
  }
  return (first ? "" : " + ") + ("(" + body + ")·");
}

}  // namespace

std::string FockState::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    out += coeff_prefix(c, first) + w.to_string();
    first = false;
  }
  return out;
}

std::string FockState::to_diagram_string(int n) const {
  std::string out = to_string() + "\n";
  for (const auto& [w, c] : terms_) {
    Partition p = partition_of_word(w);
    out += "\n" + c.to_string() + " ×\n";
    out += render_young_diagram(p, Box(n, w.length() - n));
  }
  return out;
}

// ---------------------------------------------------------------- operators

FockState apply_linear(const FockState& s, const std::function<FockState(const BitWord&)>& on_word) {
  FockState out;
  for (const auto& [w, c] : s.terms()) {
    FockState image = on_word(w);
    for (const auto& [w2, c2] : image.terms()) out.add(w2, c * c2);
  }
  return out;
}

namespace {

void check_site(int site, int length) {
  if (site < 1 || site > length) throw std::out_of_range("site outside 1..N");
}

int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// ψ*_i on one word; returns sign (0 when the site is occupied) and the image.
std::pair<int, BitWord> create_on(int site, const BitWord& w) {
  check_site(site, w.length());
  if (w.at(site)) return {0, w};
  return {parity_sign(w.count_upto(site - 1)), w.with(site, true)};
}

std::pair<int, BitWord> annihilate_on(int site, const BitWord& w) {
  check_site(site, w.length());
  if (!w.at(site)) return {0, w};
  return {parity_sign(w.count_upto(site - 1)), w.with(site, false)};
}

}  // namespace

FockState apply_create(int site, const FockState& s) {
  return apply_linear(s, [site](const BitWord& w) {
    auto [sign, image] = create_on(site, w);
    return sign == 0 ? FockState{} : FockState(image, sign);
  });
}

FockState apply_annihilate(int site, const FockState& s) {
  return apply_linear(s, [site](const BitWord& w) {
    auto [sign, image] = annihilate_on(site, w);
    return sign == 0 ? FockState{} : FockState(image, sign);
  });
}

FockState apply_extended(const OperatorKind& op, const FockState& s) {
  if (op.site < 1) throw std::out_of_range("operator site must be positive");
  return apply_linear(s, [&op](const BitWord& w) {
    const int len = w.length();
    if (op.site >= 2 * len) throw std::out_of_range("operator site wraps more than once");
    if (op.flavor == Flavor::annihilate) {
      if (op.site > len) throw std::out_of_range("annihilator site above N");
      auto [sign, image] = annihilate_on(op.site, w);
      return sign == 0 ? FockState{} : FockState(image, sign);
    }
    const bool wraps = op.site > len;
    const int site = wraps ? op.site - len : op.site;
    auto [sign, image] = create_on(site, w);
    if (sign == 0) return FockState{};
    if (!wraps) return FockState(image, sign);
    const int after = image.particles();
    const int wrap_sign = op.barred ? parity_sign(after) : parity_sign(after + 1);
    return FockState(image, QPoly::monomial(1, sign * wrap_sign));
  });
}

FockState nil_tl_letter(int i, const FockState& s, bool negate_q) {
  return apply_linear(s, [i, negate_q](const BitWord& w) {
    const int len = w.length();
    check_site(i, len);
    if (i < len) {
      auto [s1, w1] = annihilate_on(i, w);
      if (s1 == 0) return FockState{};
      auto [s2, w2] = create_on(i + 1, w1);
      if (s2 == 0) return FockState{};
      return FockState(w2, s1 * s2);
    }
    auto [s1, w1] = annihilate_on(len, w);
    if (s1 == 0) return FockState{};
    auto [s2, w2] = create_on(1, w1);
    if (s2 == 0) return FockState{};
    int sign = s1 * s2 * parity_sign(w.particles() - 1) * (negate_q ? -1 : 1);
    return FockState(w2, QPoly::monomial(1, sign));
  });
}

namespace {

int state_length(const FockState& s) {
  return s.is_zero() ? 0 : s.terms().begin()->first.length();
}

// Applies a product of letters; `letters` is in application order.
FockState apply_letters(const std::vector<int>& letters, FockState s, bool negate_q) {
  for (int i : letters) {
    if (s.is_zero()) break;
    s = nil_tl_letter(i, s, negate_q);
  }
  return s;
}

// Ordered product over a cyclic index set I ⊊ Z_N. In a clockwise product
// u_{i+1} stands left of u_i, so within each run a, a+1, …, a+m−1 of
// consecutive indices u_a acts first; counterclockwise reverses each run.
std::vector<int> cyclic_order(const std::vector<bool>& in_set, bool clockwise) {
  const int len = static_cast<int>(in_set.size()) - 1;
  int start = 1;
  while (start <= len && in_set[start]) ++start;
  // start is a site not in I; runs begin right after it.
  std::vector<int> order;
  std::vector<int> run;
  for (int step = 1; step <= len; ++step) {
    int idx = (start - 1 + step) % len + 1;
    if (in_set[idx]) {
      run.push_back(idx);
    } else if (!run.empty()) {
      if (!clockwise) std::reverse(run.begin(), run.end());
      order.insert(order.end(), run.begin(), run.end());
      run.clear();
    }
  }
  if (!run.empty()) {
    if (!clockwise) std::reverse(run.begin(), run.end());
    order.insert(order.end(), run.begin(), run.end());
  }
  return order;
}

FockState nc_symmetric(int r, const FockState& s, bool negate_q, bool clockwise) {
  if (r == 0) return s;
  if (s.is_zero()) return s;
  const int len = state_length(s);
  if (r < 0 || r > len) return FockState{};
  if (r == len) {
    const int q_sign = negate_q ? -1 : 1;
    return apply_linear(s, [&](const BitWord& w) {
      const int p = w.particles();
      if (clockwise) return FockState(w, QPoly::monomial(1, parity_sign(p - 1) * q_sign));
      return p == len ? FockState(w, QPoly::monomial(1, q_sign)) : FockState{};
    });
  }
  FockState out;
  std::vector<bool> in_set(static_cast<std::size_t>(len) + 1, false);
  auto choose = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      out += apply_letters(cyclic_order(in_set, clockwise), s, negate_q);
      return;
    }
    for (int i = next; i <= len - remaining + 1; ++i) {
      in_set[i] = true;
      self(self, i + 1, remaining - 1);
      in_set[i] = false;
    }
  };
  choose(choose, 1, r);
  return out;
}

// det(M) with M_{ij} = gen(index(i, j)) for 1 ≤ i, j ≤ size, expanded over
// permutations. The entries commute, so each product is applied in any order.
FockState determinant(int size, const std::function<int(int, int)>& index,
                      const std::function<FockState(int, const FockState&)>& gen, const FockState& s) {
  if (size == 0) return s;
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 1);
  FockState out;
  do {
    bool vanishes = false;
    for (int i = 1; i <= size && !vanishes; ++i)
      if (index(i, perm[i - 1]) < 0) vanishes = true;
    if (vanishes) continue;
    int inversions = 0;
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b)
        if (perm[a] > perm[b]) ++inversions;
    FockState term = s;
    for (int i = size; i >= 1 && !term.is_zero(); --i) term = gen(index(i, perm[i - 1]), term);
    if (inversions % 2) out -= term;
    else out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

FockState nc_elementary(int r, const FockState& s, bool negate_q) {
  return nc_symmetric(r, s, negate_q, /*clockwise=*/false);
}

FockState nc_complete(int r, const FockState& s, bool negate_q) {
  return nc_symmetric(r, s, negate_q, /*clockwise=*/true);
}

FockState nc_schur(const Partition& lambda, const FockState& s, bool negate_q) {
  const Partition conj = transpose(lambda);
  const int size = static_cast<int>(conj.length());
  return determinant(
      size, [&](int i, int j) { return conj[i] - i + j; },
      [negate_q](int r, const FockState& st) { return nc_elementary(r, st, negate_q); }, s);
}

FockState nc_schur_h(const Partition& lambda, const FockState& s, bool negate_q) {
  const int size = static_cast<int>(lambda.length());
  return determinant(
      size, [&](int i, int j) { return lambda[i] - i + j; },
      [negate_q](int r, const FockState& st) { return nc_complete(r, st, negate_q); }, s);
}

FockState star_fermionic(const Partition& lambda, const Partition& mu, const Box& box) {
  box.require(lambda);
  box.require(mu);
  const int n = box.n;
  const int len = box.sites();
  const auto ell = particle_positions(mu, n);
  const FockState vacuum(BitWord(len, 0));
  FockState out;
  for (const auto& [t, mult] : ssyt_weight_counts(lambda, n)) {
    // Operators act right to left: ℓ_1 first. In the displayed product the
    // operator carrying ℓ_{n−j} is barred iff j is odd.
    FockState state = vacuum;
    for (int i = 1; i <= n && !state.is_zero(); ++i) {
      const bool barred = (n - i) % 2 == 1;
      state = apply_extended({Flavor::create, barred, ell[i - 1] + t[i - 1]}, state);
    }
    for (const auto& [w, c] : state.terms()) out.add(w, c * QPoly(mult));
  }
  return out;
}

bool commutation_check(const Partition& lambda, int site, int length) {
  // ψ*_{j+N} = (−1)^{n̂−1} q ψ*_j on the right-hand side.
  auto create_wrapped = [length](int j, const FockState& st) {
    return apply_extended({Flavor::create, false, j}, st);
  };
  for (int particles = 0; particles < length; ++particles) {
    for (const auto& w : basis_words(length, particles)) {
      const FockState base(w);
      FockState lhs = nc_schur(lambda, apply_create(site, base));
      FockState rhs;
      for (int r = 0; r <= lambda[1]; ++r) {
        FockState inner;
        for (const auto& mu : horizontal_strips(lambda, r)) inner += nc_schur(mu, base, /*negate_q=*/true);
        if (!inner.is_zero()) rhs += create_wrapped(site + r, inner);
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

std::vector<BitWord> basis_words(int length, int particles) {
  std::vector<BitWord> out;
  for (const auto& w : all_words(length))
    if (w.particles() == particles) out.push_back(w);
  return out;
}

std::vector<BitWord> all_words(int length) {
  if (length > 24) throw std::invalid_argument("refusing to enumerate more than 2^24 words");
  std::vector<BitWord> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << length); ++b) out.emplace_back(length, b);
  return out;
}

std::string render_young_diagram(const Partition& lambda, const Box& box) {
  box.require(lambda);
  std::string out;
  for (int i = 1; i <= box.n; ++i) {
    if (lambda[i] == 0) break;
    for (int j = 1; j <= lambda[i]; ++j) out += "[]";
    out += "\n";
  }
  out += word_of_partition(lambda, box).to_string() + "\n";
  return out;
}

}  // namespace qhf
