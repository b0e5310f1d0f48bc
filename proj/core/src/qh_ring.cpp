#include "qhf/qh_ring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>
#include <tuple>

#include "qhf/tableaux.hpp"

namespace qhf {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

void require_query(const GWQuery& q) {
  q.box.require(q.lambda);
  q.box.require(q.mu);
  q.box.require(q.nu);
  if (q.d < 0) throw std::invalid_argument("degree must be nonnegative");
}

bool degree_law(const GWQuery& q) {
  return q.lambda.size() + q.mu.size() - q.nu.size() == q.d * q.box.sites();
}

}  // namespace

// ---------------------------------------------------------------- QExpansion

void QExpansion::add(const Partition& nu, int degree, const BigInt& coeff) {
  if (coeff == 0) return;
  box.require(nu);
  auto& poly = terms[nu];
  poly += QPoly::monomial(degree, coeff);
  if (poly.is_zero()) terms.erase(nu);
}

BigInt QExpansion::coeff(const Partition& nu, int degree) const {
  auto it = terms.find(nu);
  return it == terms.end() ? BigInt(0) : it->second.coeff(degree);
}

std::string QExpansion::to_string() const {
  std::vector<std::tuple<int, Partition, BigInt>> flat;
  for (const auto& [nu, poly] : terms)
    for (const auto& [d, c] : poly.coeffs()) flat.emplace_back(d, nu, c);
  std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::get<1>(a) > std::get<1>(b);
  });
  if (flat.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, nu, c] : flat) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) out += mag.str();
    if (d > 0) out += "q";
    if (d > 1) out += "^" + std::to_string(d);
    out += nu.to_string();
  }
  return out;
}

std::string_view to_string(GWAlgorithm alg) {
  switch (alg) {
    case GWAlgorithm::fermionic: return "fermionic";
    case GWAlgorithm::racah_speiser: return "racah-speiser";
    case GWAlgorithm::vev: return "vev";
    case GWAlgorithm::rim_hook: return "rim-hook";
    case GWAlgorithm::dual_rim_hook: return "dual-rim-hook";
    case GWAlgorithm::bvi: return "bvi";
  }
  return "?";
}

GWAlgorithm parse_gw_algorithm(std::string_view name) {
  for (auto alg : {GWAlgorithm::fermionic, GWAlgorithm::racah_speiser, GWAlgorithm::vev, GWAlgorithm::rim_hook,
                   GWAlgorithm::dual_rim_hook, GWAlgorithm::bvi})
    if (to_string(alg) == name) return alg;
  throw std::invalid_argument("unknown Gromov-Witten algorithm '" + std::string(name) + "'");
}

int gw_degree(const Partition& lambda, const Partition& mu, const Partition& nu, const Box& box) {
  const int excess = lambda.size() + mu.size() - nu.size();
  if (excess < 0 || excess % box.sites() != 0) return -1;
  return excess / box.sites();
}

QExpansion expansion_of_state(const FockState& s, const Box& box) {
  QExpansion out{box, {}};
  for (const auto& [w, poly] : s.terms()) {
    if (w.length() != box.sites() || w.particles() != box.n)
      throw std::invalid_argument("state does not live in the box's sector");
    out.terms.emplace(partition_of_word(w), poly);
  }
  return out;
}

QExpansion qh_product(const Partition& lambda, const Partition& mu, const Box& box, GWAlgorithm alg) {
  box.require(lambda);
  box.require(mu);
  if (alg == GWAlgorithm::fermionic) return expansion_of_state(star_fermionic(lambda, mu, box), box);
  if (alg == GWAlgorithm::dual_rim_hook) return gw_dual_rim_hook(lambda, mu, box);
  QExpansion out{box, {}};
  for (const auto& nu : partitions_in_box(box)) {
    const int d = gw_degree(lambda, mu, nu, box);
    if (d < 0) continue;
    GWQuery q{lambda, mu, nu, d, box};
    if (alg == GWAlgorithm::bvi)
      out.add(nu, d, bvi_numeric(q).rounded);
    else
      out.add(nu, d, gw_invariant(q, alg));
  }
  return out;
}

// ---------------------------------------------------------------- exact algorithms

BigInt gw_racah_speiser(const GWQuery& q) {
  require_query(q);
  if (!degree_law(q)) return 0;
  const int n = q.box.n;
  const int len = q.box.sites();
  const auto ell_nu = particle_positions(q.nu, n);
  const auto ell_mu = particle_positions(q.mu, n);
  const int cap = q.lambda[1];

  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  BigInt total = 0;
  // Assigns π(i) for i = 1..n; inversions are counted as values are placed.
  auto rec = [&](auto&& self, int i, int wraps, int inversions) -> void {
    if (i == n) {
      if (wraps != q.d) return;
      const auto k = kostka(q.lambda, alpha);
      if (k != 0) total += parity_sign(inversions + (n - 1) * q.d) * k;
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      const int diff = ell_nu[i] - ell_mu[j];
      const int w = wraps + (diff < 0 ? 1 : 0);
      const int a = mod(diff, len);
      if (a > cap || w > q.d) continue;
      int extra = 0;
      for (int t = j + 1; t < n; ++t)
        if (used[t]) ++extra;
      used[j] = true;
      alpha[i] = a;
      self(self, i + 1, w, inversions + extra);
      used[j] = false;
    }
  };
  rec(rec, 0, 0, 0);
  if (total < 0) throw std::logic_error("negative Gromov-Witten invariant from the Kostka sum");
  return total;
}

BigInt gw_vev(const GWQuery& q) {
  require_query(q);
  if (!degree_law(q)) return 0;
  const int n = q.box.n;
  const int len = q.box.sites();
  const auto ell_mu = particle_positions(q.mu, n);
  const auto ell_nu = particle_positions(q.nu, n);
  BigInt total = 0;
  for (const auto& [t, mult] : ssyt_weight_counts(q.lambda, n)) {
    int wraps = 0;
    for (int i = 0; i < n; ++i)
      if (ell_mu[i] + t[i] > len) ++wraps;
    if (wraps != q.d) continue;
    // ψ*_{ℓ_1(μ)+t_1} acts first.
    FockState state(BitWord(len, 0));
    for (int i = 0; i < n && !state.is_zero(); ++i) state = apply_create(mod(ell_mu[i] + t[i] - 1, len) + 1, state);
    // ψ_{ℓ_n(ν)} acts first on the way back down.
    for (int i = n - 1; i >= 0 && !state.is_zero(); --i) state = apply_annihilate(ell_nu[i], state);
    if (state.is_zero()) continue;
    const BigInt amplitude = state.coeff(BitWord(len, 0)).coeff(0);
    total += amplitude * mult * parity_sign(q.d * (n - 1));
  }
  if (total < 0) throw std::logic_error("negative Gromov-Witten invariant from the vacuum expectation values");
  return total;
}


std::map<Partition, int> rim_hook_shapes(const Partition& nu, int hooks, const Box& box) {
  const int len = box.sites();
  const int beads = static_cast<int>(nu.length()) + hooks * len + 1;
  std::set<int> start;
  for (int i = 1; i <= beads; ++i) start.insert(nu[i] + beads - i);
  std::map<std::set<int>, int> layer{{start, 1}};
  for (int step = 0; step < hooks; ++step) {
    std::map<std::set<int>, int> next;
    for (const auto& [beta, sign] : layer) {
      // Beads of zero parts fill 0..g−1 where g is the first gap.
      int gap = 0;
      while (beta.count(gap)) ++gap;
      for (int b = 0; b < gap; ++b) {
        if (beta.count(b + len)) continue;
        const int between = static_cast<int>(std::distance(beta.upper_bound(b), beta.lower_bound(b + len)));
        const int height = 1 + between;
        const int width = len - height + 1;
        auto moved = beta;
        moved.erase(b);
        moved.insert(b + len);
        next.emplace(std::move(moved), sign * parity_sign(box.k - width));
      }
    }
    layer = std::move(next);
  }
  std::map<Partition, int> out;
  for (const auto& [beta, sign] : layer) {
    std::vector<int> parts;
    int i = 1;
    for (auto it = beta.rbegin(); it != beta.rend(); ++it, ++i) parts.push_back(*it - (beads - i));
    Partition rho(std::move(parts));
    if (rho[1] > box.k) continue;
    out.emplace(rho, sign);
  }
  return out;
}


BigInt gw_rim_hook(const GWQuery& q) {
  require_query(q);
  if (!degree_law(q)) return 0;
  BigInt total = 0;
  for (const auto& [rho, sign] : rim_hook_shapes(q.nu, q.d, q.box))
    total += sign * littlewood_richardson(q.lambda, q.mu, rho);
  if (total < 0) throw std::logic_error("negative Gromov-Witten invariant from the rim-hook sum");
  return total;
}

QExpansion gw_dual_rim_hook(const Partition& lambda, const Partition& mu, const Box& box) {
  box.require(lambda);
  box.require(mu);
  const int n = box.n;
  const int len = box.sites();
  QExpansion out{box, {}};
  for (const auto& [nu, c] : lr_expand(lambda, mu)) {
    if (static_cast<int>(nu.length()) > n) continue;
    IntVector v(static_cast<std::size_t>(n));
    int reduced = 0;
    for (int i = 1; i <= n; ++i) {
      // Representative of ν_i mod N in [i − n, i + k).
      v[i - 1] = mod(nu[i] - (i - n), len) + (i - n);
      reduced += v[i - 1];
    }
    const int d = (nu.size() - reduced) / len;
    auto s = straighten(v);
    if (s.sign == 0) continue;
    if (!box.contains(s.partition)) throw std::logic_error("dual rim-hook reduction left the box");
    out.add(s.partition, d, BigInt(c) * s.sign * parity_sign(d * (n - 1)));
  }
  return out;
}

BigInt gw_fermionic(const GWQuery& q) {
  require_query(q);
  if (!degree_law(q)) return 0;
  return star_fermionic(q.lambda, q.mu, q.box).coeff(word_of_partition(q.nu, q.box)).coeff(q.d);
}

BigInt gw_invariant(const GWQuery& q, GWAlgorithm alg) {
  switch (alg) {
    case GWAlgorithm::fermionic: return gw_fermionic(q);
    case GWAlgorithm::racah_speiser: return gw_racah_speiser(q);
    case GWAlgorithm::vev: return gw_vev(q);
    case GWAlgorithm::rim_hook: return gw_rim_hook(q);
    case GWAlgorithm::dual_rim_hook:
      require_query(q);
      return gw_dual_rim_hook(q.lambda, q.mu, q.box).coeff(q.nu, q.d);
    case GWAlgorithm::bvi: return bvi_numeric(q).rounded;
  }
  throw std::invalid_argument("unknown algorithm");
}

BigInt extract_gw(const QExpansion& e, const Partition& nu, int degree) { return e.coeff(nu, degree); }

// ---------------------------------------------------------------- numerics

namespace {

using Complex = std::complex<double>;

// Determinant by Gaussian elimination with partial pivoting; reports the
// smallest pivot magnitude encountered.
Complex determinant(std::vector<std::vector<Complex>> m, double& min_pivot) {
  const std::size_t size = m.size();
  Complex det = 1.0;
  min_pivot = size == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < size; ++r)
      if (std::abs(m[r][col]) > std::abs(m[best][col])) best = r;
    min_pivot = std::min(min_pivot, std::abs(m[best][col]));
    if (std::abs(m[best][col]) == 0.0) return 0.0;
    if (best != col) {
      std::swap(m[best], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      const Complex f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < size; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Complex schur_by_tableaux(const Partition& lambda, const std::vector<Complex>& x) {
  Complex total = 0.0;
  const int vars = static_cast<int>(x.size());
  for (const auto& [w, count] : ssyt_weight_counts(lambda, vars)) {
    Complex term = static_cast<double>(count);
    for (int i = 0; i < vars; ++i) term *= std::pow(x[i], w[i]);
    total += term;
  }
  return total;
}

}  // namespace

std::complex<double> evaluate_schur(const Partition& lambda, const std::vector<std::complex<double>>& x) {
  const int vars = static_cast<int>(x.size());
  if (static_cast<int>(lambda.length()) > vars) return 0.0;
  std::vector<std::vector<Complex>> num(vars, std::vector<Complex>(vars));
  std::vector<std::vector<Complex>> den(vars, std::vector<Complex>(vars));
  for (int i = 0; i < vars; ++i)
    for (int j = 0; j < vars; ++j) {
      num[i][j] = std::pow(x[i], lambda[j + 1] + vars - 1 - j);
      den[i][j] = std::pow(x[i], vars - 1 - j);
    }
  double pivot_num = 0.0;
  double pivot_den = 0.0;
  const Complex d = determinant(den, pivot_den);
  if (pivot_den < 1e-12) return schur_by_tableaux(lambda, x);
  return determinant(num, pivot_num) / d;
}

std::vector<double> i_map(const Partition& sigma, int rows) {
  std::vector<double> out(static_cast<std::size_t>(rows));
  for (int j = 1; j <= rows; ++j) out[j - 1] = (rows + 1) / 2.0 + sigma[rows + 1 - j] - (rows + 1 - j);
  return out;
}

std::vector<std::complex<double>> root_points(const std::vector<double>& exponents, int sites, int sign) {
  std::vector<Complex> out;
  out.reserve(exponents.size());
  for (double e : exponents) out.push_back(std::polar(1.0, sign * 2.0 * std::numbers::pi * e / sites));
  return out;
}

NumericValue bvi_numeric(const GWQuery& q) {
  require_query(q);
  if (!degree_law(q)) return {0.0, 0};
  const int n = q.box.n;
  const int len = q.box.sites();
  Complex total = 0.0;
  for (const auto& sigma : partitions_in_box(q.box)) {
    const auto idx = i_map(sigma, n);
    const auto plus = root_points(idx, len, 1);
    const auto minus = root_points(idx, len, -1);
    double measure = 1.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) measure *= std::norm(plus[i] - plus[j]);
    total += evaluate_schur(q.lambda, minus) * evaluate_schur(q.mu, minus) * evaluate_schur(q.nu, plus) * measure;
  }
  total /= std::pow(static_cast<double>(len), n);
  const long long rounded = std::llround(total.real());
  if (std::abs(total.imag()) > 1e-6 || std::abs(total.real() - static_cast<double>(rounded)) > 1e-6)
    throw std::runtime_error("residue sum is not integral");
  return {total, rounded};
}

double technical_lemma_residual(const Partition& lambda, const Partition& sigma, const Box& box) {
  box.require(lambda);
  box.require(sigma);
  const int len = box.sites();
  const auto lhs = evaluate_schur(lambda, root_points(i_map(sigma, box.n), len, 1));
  const auto rhs = evaluate_schur(transpose(lambda), root_points(i_map(transpose(sigma), box.k), len, -1));
  return std::abs(lhs - rhs);
}

}  // namespace qhf
