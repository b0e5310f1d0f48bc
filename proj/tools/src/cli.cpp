#include "qhf/cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "cache.hpp"
#include "json.hpp"
#include "qhf/fock.hpp"
#include "qhf/fusion_ring.hpp"
#include "qhf/qh_ring.hpp"
#include "qhf/serialize.hpp"
#include "qhf/tableaux.hpp"
#include "query.hpp"

namespace qhf::cli {

namespace {

using nlohmann::json;

// Thrown when algorithms disagree; maps to kCrossCheckFailure.
struct CrossCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::pair<std::string, GWAlgorithm>>& gw_names() {
  static const std::vector<std::pair<std::string, GWAlgorithm>> names = {
      {"fermion", GWAlgorithm::fermionic}, {"rs", GWAlgorithm::racah_speiser},
      {"vev", GWAlgorithm::vev},           {"rimhook", GWAlgorithm::rim_hook},
      {"dualrimhook", GWAlgorithm::dual_rim_hook}, {"bvi", GWAlgorithm::bvi}};
  return names;
}

const std::vector<std::pair<std::string, FusionAlgorithm>>& fusion_names() {
  static const std::vector<std::pair<std::string, FusionAlgorithm>> names = {
      {"projection", FusionAlgorithm::projection},
      {"lift", FusionAlgorithm::lift},
      {"kacwalton", FusionAlgorithm::kac_walton},
      {"fusionrs", FusionAlgorithm::racah_speiser},
      {"recursion", FusionAlgorithm::recursion},
      {"dualrs", FusionAlgorithm::dual_racah_speiser},
      {"dualrimhook", FusionAlgorithm::projected_dual_rim_hook},
      {"verlinde", FusionAlgorithm::verlinde}};
  return names;
}

template <class Alg>
std::vector<std::pair<std::string, Alg>> select(const std::vector<std::pair<std::string, Alg>>& names,
                                                 const std::string& choice) {
  if (choice == "all") return names;
  for (const auto& entry : names)
    if (entry.first == choice || to_string(entry.second) == choice) return {entry};
  throw std::invalid_argument("unknown algorithm '" + choice + "'");
}

bool is_exact(GWAlgorithm alg) { return alg != GWAlgorithm::bvi; }
bool is_exact(FusionAlgorithm alg) { return alg != FusionAlgorithm::verlinde; }

json big_json(const BigInt& c) { return json::parse(c.str()); }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer '" + item + "'");
    }
    if (used != item.size() || v < 0) throw std::invalid_argument("malformed weight entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

struct Options {
  int n = -1;
  int k = -1;
  std::string lhs;
  std::string rhs;
  std::string nu;
  std::optional<int> d;
  std::string alg;
  std::string format = "text";
  std::string cache;
  std::string ring = "qh";
  int jobs = 0;
  int max_sites = 6;
  bool numeric = false;
  bool diagram = false;

  std::optional<std::string> cache_path() const {
    if (!cache.empty()) return cache;
    return default_cache_path();
  }
  bool json_output() const { return format == "json"; }
};

// Runs `compute` once per algorithm and checks that all results coincide.
template <class Alg, class Result>
std::vector<std::pair<std::string, Result>> run_all(const std::vector<std::pair<std::string, Alg>>& algs,
                                                    const std::function<Result(Alg)>& compute) {
  std::vector<std::pair<std::string, Result>> out;
  for (const auto& [name, alg] : algs) out.emplace_back(name, compute(alg));
  return out;
}

template <class Result>
void require_agreement(const std::vector<std::pair<std::string, Result>>& results) {
  for (const auto& [name, r] : results)
    if (!(r == results.front().second))
      throw CrossCheckError("algorithm " + name + " disagrees with " + results.front().first);
}

template <class Expansion>
Expansion cached(const Options& o, std::string_view verb, std::string_view alg, const Partition& a,
                 const Partition& b, const std::function<Expansion()>& compute,
                 const std::function<Expansion(std::string_view)>& decode) {
  const auto path = o.cache_path();
  if (!path) return compute();
  Cache cache(*path);
  const auto key = cache_key(verb, alg, o.n, o.k, a, b);
  if (auto hit = cache.get(key)) return decode(*hit);
  auto e = compute();
  cache.put(key, to_json(e));
  return e;
}

QExpansion qh_expansion(const Options& o, const Partition& a, const Partition& b, GWAlgorithm alg) {
  const Box box(o.n, o.k);
  auto compute = [&] { return qh_product(a, b, box, alg); };
  if (!is_exact(alg)) return compute();
  return cached<QExpansion>(o, "qh-product", to_string(alg), a, b, compute,
                            [](std::string_view t) { return qexpansion_from_json(t); });
}

FusionExpansion fusion_expansion(const Options& o, const Partition& a, const Partition& b, FusionAlgorithm alg) {
  const FusionLevel lv(o.n, o.k);
  auto compute = [&] { return fusion_product(a, b, lv, alg); };
  if (!is_exact(alg)) return compute();
  return cached<FusionExpansion>(o, "fusion-product", to_string(alg), a, b, compute,
                                 [](std::string_view t) { return fusion_expansion_from_json(t); });
}

std::string diagrams(const QExpansion& e) {
  std::string out;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it)
    out += it->first.to_string() + "\n" + render_young_diagram(it->first, e.box) + "\n";
  return out;
}

template <class Result, class Text, class Json>
void emit(const Options& o, std::ostream& out, const std::vector<std::pair<std::string, Result>>& results,
          Text text, Json to_j) {
  if (o.json_output()) {
    if (results.size() == 1) {
      out << to_j(results.front().second).dump() << '\n';
    } else {
      json j = json::object();
      for (const auto& [name, r] : results) j[name] = to_j(r);
      out << j.dump() << '\n';
    }
    return;
  }
  if (results.size() == 1) {
    out << text(results.front().second) << '\n';
    return;
  }
  for (const auto& [name, r] : results) out << name << ": " << text(r) << '\n';
}

int cmd_qh_product(const Options& o, std::ostream& out) {
  const Partition a = parse_partition(o.lhs);
  const Partition b = parse_partition(o.rhs);
  const Box box(o.n, o.k);
  box.require(a);
  box.require(b);
  auto results = run_all<GWAlgorithm, QExpansion>(
      select(gw_names(), o.alg.empty() ? "fermion" : o.alg),
      [&](GWAlgorithm alg) { return qh_expansion(o, a, b, alg); });
  emit(o, out, results, [](const QExpansion& e) { return e.to_string(); },
       [](const QExpansion& e) { return json::parse(to_json(e)); });
  if (o.diagram && !o.json_output()) out << diagrams(results.front().second);
  require_agreement(results);
  return kOk;
}

int cmd_gw(const Options& o, std::ostream& out) {
  const Partition a = parse_partition(o.lhs);
  const Partition b = parse_partition(o.rhs);
  const Partition c = parse_partition(o.nu);
  const Box box(o.n, o.k);
  box.require(a);
  box.require(b);
  box.require(c);
  const int law = gw_degree(a, b, c, box);
  const int d = o.d.value_or(law);
  if (d < 0 && o.d) throw std::invalid_argument("degree must be nonnegative");
  auto results = run_all<GWAlgorithm, BigInt>(select(gw_names(), o.alg.empty() ? "fermion" : o.alg),
                                              [&](GWAlgorithm alg) -> BigInt {
                                                if (d < 0 || d != law) return 0;
                                                GWQuery q{a, b, c, d, box};
                                                if (alg == GWAlgorithm::bvi) return bvi_numeric(q).rounded;
                                                return gw_invariant(q, alg);
                                              });
  emit(o, out, results, [](const BigInt& v) { return v.str(); }, big_json);
  require_agreement(results);
  return kOk;
}

int cmd_fusion_product(const Options& o, std::ostream& out) {
  const Partition a = parse_partition(o.lhs);
  const Partition b = parse_partition(o.rhs);
  const FusionLevel lv(o.n, o.k);
  lv.require(a);
  lv.require(b);
  auto results = run_all<FusionAlgorithm, FusionExpansion>(
      select(fusion_names(), o.alg.empty() ? "kacwalton" : o.alg),
      [&](FusionAlgorithm alg) { return fusion_expansion(o, a, b, alg); });
  emit(o, out, results, [](const FusionExpansion& e) { return e.to_string(); },
       [](const FusionExpansion& e) { return json::parse(to_json(e)); });
  require_agreement(results);
  return kOk;
}

int cmd_fusion(const Options& o, std::ostream& out) {
  const Partition a = parse_partition(o.lhs);
  const Partition b = parse_partition(o.rhs);
  const Partition c = parse_partition(o.nu);
  const FusionLevel lv(o.n, o.k);
  auto results = run_all<FusionAlgorithm, BigInt>(select(fusion_names(), o.alg.empty() ? "kacwalton" : o.alg),
                                                  [&](FusionAlgorithm alg) { return fusion_coefficient(a, b, c, lv, alg); });
  emit(o, out, results, [](const BigInt& v) { return v.str(); }, big_json);
  require_agreement(results);
  return kOk;
}

int cmd_kostka(const Options& o, std::ostream& out) {
  const Partition shape = parse_partition(o.lhs);
  const auto weight = parse_ints(o.rhs);
  const auto v = kostka(shape, weight);
  out << (o.json_output() ? json(v).dump() : std::to_string(v)) << '\n';
  return kOk;
}

int cmd_lr(const Options& o, std::ostream& out) {
  const Partition a = parse_partition(o.lhs);
  const Partition b = parse_partition(o.rhs);
  if (!o.nu.empty()) {
    const auto v = littlewood_richardson(a, b, parse_partition(o.nu));
    out << (o.json_output() ? json(v).dump() : std::to_string(v)) << '\n';
    return kOk;
  }
  const auto terms = lr_expand(a, b);
  if (o.json_output()) {
    json arr = json::array();
    for (const auto& [nu, c] : terms) arr.push_back({{"nu", nu.parts()}, {"coeff", c}});
    out << json{{"terms", arr}}.dump() << '\n';
    return kOk;
  }
  std::string text;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!text.empty()) text += " + ";
    if (it->second != 1) text += std::to_string(it->second);
    text += it->first.to_string();
  }
  out << (text.empty() ? "0" : text) << '\n';
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const bool fusion = o.ring == "fusion";
  if (!fusion && o.ring != "qh") throw std::invalid_argument("ring must be qh or fusion");
  const auto basis = fusion ? partitions_in_box(FusionLevel(o.n, o.k).box()) : partitions_in_box(Box(o.n, o.k));
  json rows = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      const auto& a = basis[i];
      const auto& b = basis[j];
      std::string text;
      json value;
      if (fusion) {
        const auto alg = select(fusion_names(), o.alg.empty() ? "kacwalton" : o.alg);
        if (alg.size() != 1) throw std::invalid_argument("table needs a single algorithm");
        const auto e = fusion_expansion(o, a, b, alg.front().second);
        text = e.to_string();
        value = json::parse(to_json(e));
      } else {
        const auto alg = select(gw_names(), o.alg.empty() ? "fermion" : o.alg);
        if (alg.size() != 1) throw std::invalid_argument("table needs a single algorithm");
        const auto e = qh_expansion(o, a, b, alg.front().second);
        text = e.to_string();
        value = json::parse(to_json(e));
      }
      if (o.json_output())
        rows.push_back({{"lhs", a.parts()}, {"rhs", b.parts()}, {"product", value}});
      else
        out << a.to_string() << " * " << b.to_string() << " = " << text << '\n';
    }
  if (o.json_output()) out << rows.dump() << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max_sites < 1 || o.max_sites > 10) throw std::invalid_argument("--max-N must be between 1 and 10");
  VerifyOptions vo;
  vo.max_sites = o.max_sites;
  vo.jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  vo.numeric = o.numeric;
  vo.cache_path = o.cache_path();
  const auto report = verify(vo);
  if (o.json_output()) {
    out << json{{"max_N", o.max_sites}, {"queries", report.queries}, {"failures", report.failures},
                {"minimal_failure", report.minimal_failure}}
               .dump()
        << '\n';
  } else {
    out << "checked " << report.queries << " queries with N <= " << o.max_sites << ": " << report.failures
        << " failures\n";
    if (report.failures) out << "minimal failing query: " << report.minimal_failure << '\n';
  }
  return report.failures ? kCrossCheckFailure : kOk;
}

}  // namespace

std::optional<std::string> default_cache_path() {
  if (const char* env = std::getenv("QHF_CACHE"); env && *env) return std::string(env);
  return std::nullopt;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum cohomology of Grassmannians and sl(n) fusion rings", "qhf"};
  app.require_subcommand(1);
  Options o;

  auto add_box = [&](CLI::App* sub) {
    sub->add_option("-n", o.n, "rank / number of rows")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("-k", o.k, "level / number of columns")->required()->check(CLI::NonNegativeNumber);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache", o.cache, "cache file (default: $QHF_CACHE)");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::NonNegativeNumber);
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--lhs", o.lhs, "left partition, comma separated")->required();
    sub->add_option("--rhs", o.rhs, "right partition, comma separated")->required();
  };
  const std::string gw_algs = "fermion|rs|vev|rimhook|dualrimhook|bvi|all";
  const std::string fusion_algs = "projection|lift|kacwalton|fusionrs|recursion|dualrs|dualrimhook|verlinde|all";

  std::map<CLI::App*, std::function<int(const Options&, std::ostream&)>> handlers;

  auto* qh = app.add_subcommand("qh-product", "expand a product in the quantum cohomology ring");
  add_box(qh);
  add_pair(qh);
  add_common(qh);
  qh->add_option("--alg", o.alg, gw_algs);
  qh->add_flag("--diagram", o.diagram, "draw every term as a Young diagram");
  handlers[qh] = cmd_qh_product;

  auto* gw = app.add_subcommand("gw", "one Gromov-Witten invariant");
  add_box(gw);
  add_pair(gw);
  add_common(gw);
  gw->add_option("--nu", o.nu, "third partition")->required();
  gw->add_option("--d", o.d, "curve degree (default: from the degree law)");
  gw->add_option("--alg", o.alg, gw_algs);
  handlers[gw] = cmd_gw;

  auto* fp = app.add_subcommand("fusion-product", "expand a product in the fusion ring");
  add_box(fp);
  add_pair(fp);
  add_common(fp);
  fp->add_option("--alg", o.alg, fusion_algs);
  handlers[fp] = cmd_fusion_product;

  auto* fc = app.add_subcommand("fusion", "one fusion coefficient");
  add_box(fc);
  add_pair(fc);
  add_common(fc);
  fc->add_option("--nu", o.nu, "third partition")->required();
  fc->add_option("--alg", o.alg, fusion_algs);
  handlers[fc] = cmd_fusion;

  auto* ko = app.add_subcommand("kostka", "Kostka number of shape --lhs and weight --rhs");
  add_pair(ko);
  add_common(ko);
  handlers[ko] = cmd_kostka;

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  add_pair(lr);
  add_common(lr);
  lr->add_option("--nu", o.nu, "target partition (default: full expansion)");
  handlers[lr] = cmd_lr;

  auto* tb = app.add_subcommand("table", "multiplication table of a box or level");
  add_box(tb);
  add_common(tb);
  tb->add_option("--ring", o.ring, "qh or fusion")->check(CLI::IsMember({"qh", "fusion"}));
  tb->add_option("--alg", o.alg, "single algorithm");
  handlers[tb] = cmd_table;

  auto* vf = app.add_subcommand("verify", "exhaustive cross-algorithm sweep");
  add_common(vf);
  vf->add_option("--max-N", o.max_sites, "largest n + k");
  vf->add_flag("--numeric", o.numeric, "also check the root-of-unity sums");
  handlers[vf] = cmd_verify;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    for (auto* sub : app.get_subcommands()) return handlers.at(sub)(o, out);
  } catch (const CrossCheckError& e) {
    err << "cross-check failure: " << e.what() << '\n';
    return kCrossCheckFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "cross-check failure: " << e.what() << '\n';
    return kCrossCheckFailure;
  }
  return kValidationError;
}

}  // namespace qhf::cli
