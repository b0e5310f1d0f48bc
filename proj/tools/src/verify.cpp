#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "cache.hpp"
#include "qhf/cli.hpp"
#include "qhf/fusion_ring.hpp"
#include "qhf/qh_ring.hpp"
#include "qhf/serialize.hpp"
#include "query.hpp"

namespace qhf::cli {

namespace {

struct Task {
  bool fusion = false;
  int n = 0;
  int k = 0;
  Partition lambda;
  Partition mu;
};

std::string describe(const Task& t) {
  std::ostringstream os;
  os << (t.fusion ? "fusion-product" : "qh-product") << " -n " << t.n << " -k " << t.k << " --lhs "
     << partition_arg(t.lambda) << " --rhs " << partition_arg(t.mu);
  return os.str();
}

std::vector<Task> enumerate_tasks(int max_sites) {
  std::vector<Task> out;
  for (int len = 1; len <= max_sites; ++len) {
    for (int n = 0; n <= len; ++n) {
      const Box box(n, len - n);
      const auto basis = partitions_in_box(box);
      for (const auto& a : basis)
        for (const auto& b : basis) out.push_back({false, n, len - n, a, b});
    }
    if (len < 2) continue;
    for (int n = 1; n <= len; ++n) {
      const FusionLevel lv(n, len - n);
      const auto basis = partitions_in_box(lv.box());
      for (const auto& a : basis)
        for (const auto& b : basis) out.push_back({true, n, len - n, a, b});
    }
  }
  return out;
}

// Empty string when every algorithm agrees, else a description of the first disagreement.
std::string check_gw(const Task& t, bool numeric, Cache* cache) {
  const Box box(t.n, t.k);
  const auto ref = qh_product(t.lambda, t.mu, box, GWAlgorithm::fermionic);
  for (auto alg : kExactGWAlgorithms)
    if (qh_product(t.lambda, t.mu, box, alg) != ref) return std::string(to_string(alg)) + " disagrees with fermionic";
  if (numeric && qh_product(t.lambda, t.mu, box, GWAlgorithm::bvi) != ref) return "bvi disagrees with fermionic";
  if (cache) {
    const auto key = cache_key("qh-product", "fermionic", t.n, t.k, t.lambda, t.mu);
    const auto text = to_json(ref);
    if (auto hit = cache->get(key)) {
      if (*hit != text) return "cached result differs from recomputation";
    } else {
      cache->put(key, text);
    }
  }
  return {};
}

std::string check_fusion(const Task& t, bool numeric, Cache* cache) {
  const FusionLevel lv(t.n, t.k);
  const auto ref = kac_walton_expansion(t.lambda, t.mu, lv);
  for (auto alg : {FusionAlgorithm::projection, FusionAlgorithm::dual_racah_speiser,
                   FusionAlgorithm::projected_dual_rim_hook})
    if (fusion_product(t.lambda, t.mu, lv, alg) != ref) return std::string(to_string(alg)) + " disagrees with kac-walton";
  for (const auto& nu : partitions_in_box(lv.box())) {
    const auto c = ref.coeff(nu);
    for (auto alg : {FusionAlgorithm::lift, FusionAlgorithm::racah_speiser, FusionAlgorithm::recursion})
      if (fusion_coefficient(t.lambda, t.mu, nu, lv, alg) != c)
        return std::string(to_string(alg)) + " disagrees with kac-walton at nu=" + nu.to_string();
    if (numeric && verlinde_numeric(t.lambda, t.mu, nu, lv).rounded != c)
      return "verlinde disagrees with kac-walton at nu=" + nu.to_string();
  }
  if (cache) {
    const auto key = cache_key("fusion-product", "kac-walton", t.n, t.k, t.lambda, t.mu);
    const auto text = to_json(ref);
    if (auto hit = cache->get(key)) {
      if (*hit != text) return "cached result differs from recomputation";
    } else {
      cache->put(key, text);
    }
  }
  return {};
}

}  // namespace

VerifyReport verify(const VerifyOptions& opts) {
  const auto tasks = enumerate_tasks(opts.max_sites);
  std::unique_ptr<Cache> cache;
  if (opts.cache_path) cache = std::make_unique<Cache>(*opts.cache_path);

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> failures{0};
  std::mutex mutex;
  std::size_t first_index = tasks.size();
  std::string first_message;

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& t = tasks[i];
      std::string msg;
      try {
        msg = t.fusion ? check_fusion(t, opts.numeric, cache.get()) : check_gw(t, opts.numeric, cache.get());
      } catch (const std::exception& e) {
        msg = std::string("exception: ") + e.what();
      }
      if (msg.empty()) continue;
      ++failures;
      std::lock_guard lock(mutex);
      if (i < first_index) {
        first_index = i;
        first_message = describe(t) + ": " + msg;
      }
    }
  };
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  return {tasks.size(), failures.load(), first_message};
}

}  // namespace qhf::cli
