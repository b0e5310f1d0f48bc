#include "qhf/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qhf/tableaux.hpp"

namespace qhf {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

int parity_sign(int exponent) { return mod(exponent, 2) == 0 ? 1 : -1; }

// n_a(w) extended periodically: n_{a+N} = n_a + n.
int periodic_count(const BitWord& w, int a) {
  const int len = w.length();
  const int wraps = a >= 0 ? a / len : -((-a + len - 1) / len);
  return w.count_upto(a - wraps * len) + wraps * w.particles();
}

}  // namespace

FusionLevel::FusionLevel(int rank, int level) : n(rank), k(level) {
  if (n < 1) throw std::invalid_argument("fusion rank n must be at least 1");
  if (k < 0) throw std::invalid_argument("fusion level k must be nonnegative");
  if (n + k < 2) throw std::invalid_argument("fusion ring needs n + k >= 2");
  if (n + k > BitWord::kMaxLength) throw std::invalid_argument("fusion ring too large");
}

void FusionLevel::require(const Partition& p) const {
  if (!contains(p)) {
    std::ostringstream os;
    os << "partition " << p << " is not a level-" << k << " weight of sl(" << n << ")";
    throw std::invalid_argument(os.str());
  }
}

// ---------------------------------------------------------------- weights

int AffineWeight::level() const { return std::accumulate(labels.begin(), labels.end(), 0); }

AffineWeight partition_to_weight(const Partition& lambda, const FusionLevel& lv) {
  lv.require(lambda);
  AffineWeight w;
  w.labels.push_back(lv.k - lambda[1]);
  for (int i = 1; i < lv.n; ++i) w.labels.push_back(lambda[i] - lambda[i + 1]);
  return w;
}

Partition weight_to_partition(const AffineWeight& w) {
  if (w.labels.empty()) throw std::invalid_argument("affine weight needs at least the zeroth label");
  for (int m : w.labels)
    if (m < 0) throw std::invalid_argument("affine weight is not dominant");
  const int n = static_cast<int>(w.labels.size());
  std::vector<int> parts(static_cast<std::size_t>(n - 1), 0);
  int acc = 0;
  for (int i = n - 1; i >= 1; --i) {
    acc += w.labels[i];
    parts[i - 1] = acc;
  }
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------- expansions

void FusionExpansion::add(const Partition& nu, const BigInt& c) {
  if (c == 0) return;
  level.require(nu);
  auto& slot = terms[nu];
  slot += c;
  if (slot == 0) terms.erase(nu);
}

BigInt FusionExpansion::coeff(const Partition& nu) const {
  auto it = terms.find(nu);
  return it == terms.end() ? BigInt(0) : it->second;
}

std::string FusionExpansion::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [nu, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) out += mag.str();
    out += nu.to_string();
  }
  return out;
}

std::string_view to_string(FusionAlgorithm alg) {
  switch (alg) {
    case FusionAlgorithm::projection: return "projection";
    case FusionAlgorithm::lift: return "lift";
    case FusionAlgorithm::kac_walton: return "kac-walton";
    case FusionAlgorithm::racah_speiser: return "racah-speiser";
    case FusionAlgorithm::recursion: return "recursion";
    case FusionAlgorithm::dual_racah_speiser: return "dual-racah-speiser";
    case FusionAlgorithm::projected_dual_rim_hook: return "projected-dual-rim-hook";
    case FusionAlgorithm::verlinde: return "verlinde";
  }
  return "?";
}

FusionAlgorithm parse_fusion_algorithm(std::string_view name) {
  for (auto alg : kExactFusionAlgorithms)
    if (to_string(alg) == name) return alg;
  if (name == to_string(FusionAlgorithm::verlinde)) return FusionAlgorithm::verlinde;
  throw std::invalid_argument("unknown fusion algorithm '" + std::string(name) + "'");
}

int fusion_degree(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv) {
  const int excess = lambda.size() + mu.size() - nu.size();
  if (excess < 0 || excess % lv.n != 0) return -1;
  return excess / lv.n;
}

namespace {

void require_triple(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv) {
  lv.require(lambda);
  lv.require(mu);
  lv.require(nu);
}

FusionExpansion by_coefficients(const Partition& lambda, const Partition& mu, const FusionLevel& lv,
                                FusionAlgorithm alg) {
  FusionExpansion out{lv, {}};
  for (const auto& nu : partitions_in_box(lv.box())) out.add(nu, fusion_coefficient(lambda, mu, nu, lv, alg));
  return out;
}

}  // namespace

FusionExpansion fusion_product(const Partition& lambda, const Partition& mu, const FusionLevel& lv,
                               FusionAlgorithm alg) {
  lv.require(lambda);
  lv.require(mu);
  switch (alg) {
    case FusionAlgorithm::projection: return fusion_by_projection(lambda, mu, lv);
    case FusionAlgorithm::kac_walton: return kac_walton_expansion(lambda, mu, lv);
    case FusionAlgorithm::dual_racah_speiser: return fusion_dual_rs(lambda, mu, lv);
    case FusionAlgorithm::projected_dual_rim_hook: return fusion_projected_dual_rim_hook(lambda, mu, lv);
    default: return by_coefficients(lambda, mu, lv, alg);
  }
}

BigInt fusion_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv,
                          FusionAlgorithm alg) {
  require_triple(lambda, mu, nu, lv);
  switch (alg) {
    case FusionAlgorithm::lift: return fusion_by_lift(lambda, mu, nu, lv);
    case FusionAlgorithm::kac_walton: return kac_walton(lambda, mu, nu, lv);
    case FusionAlgorithm::racah_speiser: return fusion_racah_speiser(lambda, mu, nu, lv);
    case FusionAlgorithm::recursion: return fusion_recursion(lambda, mu, nu, lv);
    case FusionAlgorithm::verlinde: return verlinde_numeric(lambda, mu, nu, lv).rounded;
    default: return fusion_product(lambda, mu, lv, alg).coeff(nu);
  }
}

// ---------------------------------------------------------------- projection and lift

FusionExpansion project_expansion(const QExpansion& e, const FusionLevel& lv) {
  if (!(e.box == lv.qh_box())) throw std::invalid_argument("expansion box does not match the fusion level");
  FusionExpansion out{lv, {}};
  for (const auto& [nu, poly] : e.terms)
    for (const auto& [d, c] : poly.coeffs()) out.add(rot(column_reduce(nu, lv.n), lv.n, lv.k, d), c);
  return out;
}

FusionExpansion fusion_by_projection(const Partition& lambda, const Partition& mu, const FusionLevel& lv,
                                     GWAlgorithm alg) {
  return project_expansion(qh_product(lambda, mu, lv.qh_box(), alg), lv);
}

BigInt fusion_by_lift(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv,
                      GWAlgorithm alg) {
  require_triple(lambda, mu, nu, lv);
  const int d_hat = fusion_degree(lambda, mu, nu, lv);
  if (d_hat < 0) return 0;
  const Box box = lv.qh_box();
  const int len = lv.sites();
  const Partition sigma = big_rot(nu, box, -d_hat);
  const int excess = lambda.size() + mu.size() - sigma.size();
  if (excess < 0 || excess % len != 0) return 0;
  const int d = excess / len;
  if (d_hat <= len && d != lv.n - n_counter(nu, box, len - d_hat))
    throw std::logic_error("lifted degree disagrees with the particle count rule");
  return gw_invariant(GWQuery{lambda, mu, sigma, d, box}, alg);
}

// ---------------------------------------------------------------- Kac-Walton

AlcoveImage reduce_to_alcove(const Partition& sigma, const FusionLevel& lv) {
  const int n = lv.n;
  if (static_cast<int>(sigma.length()) > n - 1) throw std::invalid_argument("weight has too many rows");
  if (n == 1) return {1, {}};
  // Shifted labels of σ̂ + ρ̂ at level k + n.
  std::vector<int> a(static_cast<std::size_t>(n));
  a[0] = lv.k - sigma[1] + 1;
  for (int i = 1; i < n; ++i) a[i] = sigma[i] - sigma[i + 1] + 1;
  int reflections = 0;
  const int cap = 10 * lv.sites();
  while (true) {
    if (std::find(a.begin(), a.end(), 0) != a.end()) return {0, {}};
    auto neg = std::find_if(a.begin(), a.end(), [](int x) { return x < 0; });
    if (neg == a.end()) break;
    if (++reflections > cap) throw std::logic_error("alcove reduction did not terminate");
    const int i = static_cast<int>(neg - a.begin());
    const int v = a[i];
    a[i] = -v;
    if (n == 2) {
      a[1 - i] += 2 * v;
    } else {
      a[mod(i - 1, n)] += v;
      a[mod(i + 1, n)] += v;
    }
  }
  AffineWeight w;
  for (int x : a) w.labels.push_back(x - 1);
  return {parity_sign(reflections), weight_to_partition(w)};
}

FusionExpansion kac_walton_expansion(const Partition& lambda, const Partition& mu, const FusionLevel& lv) {
  lv.require(lambda);
  lv.require(mu);
  FusionExpansion out{lv, {}};
  for (const auto& [sigma, c] : lr_expand(lambda, mu)) {
    if (static_cast<int>(sigma.length()) > lv.n) continue;
    auto img = reduce_to_alcove(column_reduce(sigma, lv.n), lv);
    if (img.sign != 0) out.add(img.image, BigInt(c) * img.sign);
  }
  return out;
}

BigInt kac_walton(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv) {
  require_triple(lambda, mu, nu, lv);
  BigInt total = 0;
  for (const auto& [sigma, c] : lr_expand(lambda, mu)) {
    if (static_cast<int>(sigma.length()) > lv.n) continue;
    auto img = reduce_to_alcove(column_reduce(sigma, lv.n), lv);
    if (img.sign != 0 && img.image == nu) total += BigInt(c) * img.sign;
  }
  return total;
}

// ---------------------------------------------------------------- Racah-Speiser

BigInt fusion_racah_speiser(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv) {
  require_triple(lambda, mu, nu, lv);
  const int d_hat = fusion_degree(lambda, mu, nu, lv);
  if (d_hat < 0) return 0;
  const int n = lv.n;
  const int len = lv.sites();
  const Box box = lv.qh_box();
  const Partition sigma = big_rot(nu, box, -d_hat);
  const int excess = lambda.size() + mu.size() - sigma.size();
  if (excess < 0 || excess % len != 0) return 0;
  const int d = excess / len;
  const auto ell_nu = particle_positions(nu, n);
  const auto ell_mu = particle_positions(mu, n);
  const int cap = lambda[1];

  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  BigInt total = 0;
  auto rec = [&](auto&& self, int i, int wraps, int inversions) -> void {
    if (i == n) {
      if (wraps != d) return;
      const auto k = kostka(lambda, alpha);
      // d(n − d) reorders the wrapped positions back into increasing order.
      if (k != 0) total += parity_sign(inversions + (n + 1) * d + d * (n - d)) * k;
      return;
    }
    // Shifted position in the representatives 1..N.
    const int shifted = mod(ell_nu[i] + d_hat - 1, len) + 1;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      const int w = wraps + (shifted < ell_mu[j] ? 1 : 0);
      const int a = mod(ell_nu[i] - ell_mu[j] + d_hat, len);
      if (a > cap || w > d) continue;
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
  return total;
}

// ---------------------------------------------------------------- recursion

BigInt fusion_sl2(int a, int b, int c, int k) {
  if (a < 0 || b < 0 || c < 0 || a > k || b > k || c > k) return 0;
  if ((a + b + c) % 2 != 0) return 0;
  return std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) ? 1 : 0;
}

std::vector<int> admissible_sites(const Partition& mu, const FusionLevel& lv, RecursionDirection dir) {
  const BitWord w = word_of_partition(mu, lv.qh_box());
  std::vector<int> out;
  for (int j = 1; j <= w.length(); ++j)
    if (w.at(j) == (dir == RecursionDirection::lower_n)) out.push_back(j);
  return out;
}

namespace {

struct LiftData {
  int d_hat = -1;
  int d = -1;
  BitWord sigma_word;
};

LiftData lift_data(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv) {
  LiftData out;
  const int d_hat = fusion_degree(lambda, mu, nu, lv);
  if (d_hat < 0) return out;
  const Box box = lv.qh_box();
  const Partition sigma = big_rot(nu, box, -d_hat);
  const int excess = lambda.size() + mu.size() - sigma.size();
  if (excess < 0 || excess % lv.sites() != 0) return out;
  out.d_hat = d_hat;
  out.d = excess / lv.sites();
  out.sigma_word = word_of_partition(sigma, box);
  return out;
}

BigInt trivial_ring(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lambda.empty() && mu.empty() && nu.empty() ? 1 : 0;
}

BigInt raise_n(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv, int site);

}  // namespace

std::vector<RecursionTerm> lower_n_terms(const Partition& lambda, const Partition& mu, const Partition& nu,
                                         const FusionLevel& lv, int site) {
  require_triple(lambda, mu, nu, lv);
  if (lv.n < 2) throw std::invalid_argument("lower_n needs n >= 2");
  const auto data = lift_data(lambda, mu, nu, lv);
  if (data.d < 0) return {};
  const int n = lv.n;
  const int len = lv.sites();
  const FusionLevel lower(n - 1, lv.k + 1);
  const BitWord wmu = word_of_partition(mu, lv.qh_box());
  if (site < 1 || site > len || !wmu.at(site)) throw std::invalid_argument("ψ_j annihilates w(μ) for this j");
  const Partition mu_down = column_reduce(partition_of_word(wmu.with(site, false)), n - 1);
  std::vector<RecursionTerm> out;
  for (int r = 0; r <= lambda[1]; ++r) {
    const int target = mod(site + r - 1, len) + 1;
    if (!data.sigma_word.at(target)) continue;
    const Partition sigma_down = column_reduce(partition_of_word(data.sigma_word.with(target, false)), n - 1);
    const int sign =
        parity_sign(data.d + wmu.count_upto(site - 1) + periodic_count(data.sigma_word, site + r - 1));
    const int d_r = site + r <= len ? data.d : data.d - 1;
    const Partition nu_down = rot(sigma_down, n - 1, lv.k + 1, d_r);
    for (const auto& rho : horizontal_strips(lambda, r)) {
      RecursionTerm t{r, column_reduce(rho, n - 1), mu_down, nu_down, sign, 0};
      t.value = fusion_recursion(t.rho, t.mu_reduced, t.nu_reduced, lower, RecursionDirection::lower_n);
      out.push_back(std::move(t));
    }
  }
  return out;
}

BigInt fusion_recursion(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv,
                        RecursionDirection dir, int site) {
  require_triple(lambda, mu, nu, lv);
  if (dir == RecursionDirection::raise_n) return raise_n(lambda, mu, nu, lv, site);
  if (lv.n == 1) return trivial_ring(lambda, mu, nu);
  if (lv.n == 2) return fusion_sl2(lambda[1], mu[1], nu[1], lv.k);
  if (site == 0) site = admissible_sites(mu, lv, dir).front();
  BigInt total = 0;
  for (const auto& t : lower_n_terms(lambda, mu, nu, lv, site)) total += t.sign * t.value;
  return total;
}

namespace {

BigInt raise_n(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv, int site) {
  if (lv.k == 0) return trivial_ring(lambda, mu, nu);
  const auto data = lift_data(lambda, mu, nu, lv);
  if (data.d < 0) return 0;
  const int n = lv.n;
  const int len = lv.sites();
  const FusionLevel upper(n + 1, lv.k - 1);
  const BitWord wmu = word_of_partition(mu, lv.qh_box());
  if (site == 0) site = admissible_sites(mu, lv, RecursionDirection::raise_n).front();
  if (site < 1 || site > len || wmu.at(site)) throw std::invalid_argument("ψ*_j annihilates w(μ) for this j");
  const Partition mu_up = column_reduce(partition_of_word(wmu.with(site, true)), n + 1);
  BigInt total = 0;
  for (int r = 0; r <= static_cast<int>(lambda.length()); ++r) {
    const int target = mod(site - r - 1, len) + 1;
    if (data.sigma_word.at(target)) continue;
    const Partition sigma_up = column_reduce(partition_of_word(data.sigma_word.with(target, true)), n + 1);
    const int sign =
        parity_sign(data.d + r + wmu.count_upto(site - 1) + periodic_count(data.sigma_word, site - r - 1));
    // Wrapping below site 1 lowers the degree.
    const int d_r = site > r ? data.d : data.d - 1;
    const Partition nu_up = rot(sigma_up, n + 1, lv.k - 1, d_r);
    for (const auto& rho : vertical_strips(lambda, r)) {
      const Partition rho_up = column_reduce(rho, n + 1);
      if (!upper.contains(rho_up)) continue;
      total += sign * fusion_recursion(rho_up, mu_up, nu_up, upper, RecursionDirection::raise_n);
    }
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------- level-rank duality

Partition level_rank_image(const Partition& lambda, const FusionLevel& lv) {
  lv.require(lambda);
  return column_reduce(transpose(lambda), lv.k);
}

BigInt level_rank(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv,
                  FusionAlgorithm alg) {
  require_triple(lambda, mu, nu, lv);
  if (lv.k < 1) throw std::invalid_argument("level-rank duality needs k >= 1");
  const int d_hat = fusion_degree(lambda, mu, nu, lv);
  if (d_hat < 0) return 0;
  const FusionLevel dual = lv.dual();
  const Partition target = rot(level_rank_image(nu, lv), dual.n, dual.k, d_hat);
  return fusion_coefficient(level_rank_image(lambda, lv), level_rank_image(mu, lv), target, dual, alg);
}

// ---------------------------------------------------------------- dual algorithms

namespace {

// v_i ≡ x_i mod N with i − lo ≤ v_i < i + hi, i = 1..rows; returns (v, d).
std::pair<IntVector, int> modular_reduce(const Partition& x, int rows, int lo, int hi) {
  const int len = lo + hi;
  IntVector v(static_cast<std::size_t>(rows));
  int reduced = 0;
  for (int i = 1; i <= rows; ++i) {
    v[i - 1] = mod(x[i] - (i - lo), len) + (i - lo);
    reduced += v[i - 1];
  }
  return {v, (x.size() - reduced) / len};
}

}  // namespace

ReducedSchur dual_rs_reduce(const Partition& rho_t, const FusionLevel& lv) {
  const int n = lv.n;
  const int k = lv.k;
  if (static_cast<int>(rho_t.length()) > k) return {0, 0, {}};
  auto [v, d] = modular_reduce(rho_t, k, k, n);
  auto s = straighten(v);
  if (s.sign == 0) return {0, d, {}};
  std::vector<int> parts = s.partition.padded(static_cast<std::size_t>(k));
  for (auto& x : parts) x += d;
  return {s.sign * parity_sign(d * (k - 1)), d, Partition(std::move(parts))};
}

FusionExpansion fusion_dual_rs(const Partition& lambda, const Partition& mu, const FusionLevel& lv) {
  lv.require(lambda);
  lv.require(mu);
  FusionExpansion out{lv, {}};
  if (lv.k == 0) {
    out.add({}, 1);
    return out;
  }
  for (const auto& [rho_t, c] : lr_expand(transpose(lambda), transpose(mu))) {
    auto red = dual_rs_reduce(rho_t, lv);
    if (red.sign == 0) continue;
    Partition nu;
    if (red.shape[1] <= lv.n) {
      nu = transpose(row_reduce(red.shape, lv.n));
    } else {
      // Literal k-columns overflow; apply e_k^d as rot^d on the untransposed side instead.
      std::vector<int> base = red.shape.padded(static_cast<std::size_t>(lv.k));
      for (auto& x : base) x -= red.degree;
      nu = rot(column_reduce(transpose(Partition(std::move(base))), lv.n), lv.n, lv.k, red.degree);
    }
    out.add(nu, BigInt(c) * red.sign);
  }
  return out;
}

FusionExpansion fusion_projected_dual_rim_hook(const Partition& lambda, const Partition& mu, const FusionLevel& lv) {
  lv.require(lambda);
  lv.require(mu);
  const int n = lv.n;
  FusionExpansion out{lv, {}};
  for (const auto& [rho, c] : lr_expand(lambda, mu)) {
    if (static_cast<int>(rho.length()) > n) continue;
    auto [v, d] = modular_reduce(column_reduce(rho, n), n, n, lv.k);
    auto s = straighten(v);
    if (s.sign == 0) continue;
    const Partition sigma = column_reduce(s.partition, n);
    if (sigma[1] > lv.k) throw std::logic_error("projected dual rim-hook reduction left the box");
    out.add(rot(sigma, n, lv.k, d), BigInt(c) * s.sign * parity_sign(d * (n - 1)));
  }
  return out;
}

// ---------------------------------------------------------------- Verlinde

std::complex<double> verlinde_sum(const Partition& lambda, const Partition& mu, const Partition& nu,
                                  const FusionLevel& lv, VerlindePhase phase) {
  require_triple(lambda, mu, nu, lv);
  const int n = lv.n;
  const int len = lv.sites();
  std::complex<double> total = 0.0;
  for (const auto& sigma : partitions_in_box(lv.box())) {
    const auto idx = i_map(sigma, n);
    const double shift = phase == VerlindePhase::per_rank ? sigma.size() / static_cast<double>(n) : sigma.size();
    std::vector<double> down(idx.size());
    std::vector<double> up(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      down[i] = shift - idx[i];
      up[i] = idx[i] - shift;
    }
    const auto plain = root_points(idx, len, 1);
    double measure = 1.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) measure *= std::norm(plain[i] - plain[j]);
    const auto x = root_points(down, len, 1);
    const auto y = root_points(up, len, 1);
    total += evaluate_schur(lambda, x) * evaluate_schur(mu, x) * evaluate_schur(nu, y) * measure;
  }
  return total / (n * std::pow(static_cast<double>(len), n - 1));
}

NumericValue verlinde_numeric(const Partition& lambda, const Partition& mu, const Partition& nu, const FusionLevel& lv,
                              VerlindePhase phase) {
  const auto total = verlinde_sum(lambda, mu, nu, lv, phase);
  const long long rounded = std::llround(total.real());
  if (std::abs(total.imag()) > 1e-6 || std::abs(total.real() - static_cast<double>(rounded)) > 1e-6)
    throw std::runtime_error("Verlinde sum is not integral");
  return {total, rounded};
}

}  // namespace qhf
