#include "qhf/serialize.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace qhf {

namespace {

using nlohmann::json;

json coeff_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return c.convert_to<std::int64_t>();
  return c.str();
}

BigInt coeff_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("coefficient must be an integer");
}

Partition partition_of(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::pair<int, int> dims_of(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].contains("n") || !j[key].contains("k"))
    throw std::invalid_argument(std::string("missing \"") + key + "\" with n and k");
  return {j[key]["n"].get<int>(), j[key]["k"].get<int>()};
}

}  // namespace

std::string to_json(const Partition& p) { return json(p.parts()).dump(); }

std::string to_json(const AffineWeight& w) { return json(w.labels).dump(); }

std::string to_json(const QExpansion& e) {
  std::vector<std::pair<int, Partition>> order;
  for (const auto& [nu, poly] : e.terms)
    if (!poly.is_zero()) order.emplace_back(poly.coeffs().begin()->first, nu);
  std::sort(order.begin(), order.end());
  json terms = json::array();
  for (const auto& [degree, nu] : order) {
    json coeffs = json::object();
    for (const auto& [d, c] : e.terms.at(nu).coeffs()) coeffs[std::to_string(d)] = coeff_json(c);
    terms.push_back({{"nu", nu.parts()}, {"coeffs", coeffs}});
  }
  json out = {{"box", {{"n", e.box.n}, {"k", e.box.k}}}, {"terms", terms}};
  return out.dump();
}

std::string to_json(const FusionExpansion& e) {
  json terms = json::array();
  for (const auto& [nu, c] : e.terms)
    terms.push_back({{"nu", nu.parts()}, {"weight", partition_to_weight(nu, e.level).labels}, {"coeff", coeff_json(c)}});
  json out = {{"level", {{"n", e.level.n}, {"k", e.level.k}}}, {"terms", terms}};
  return out.dump();
}

Partition partition_from_json(std::string_view text) { return partition_of(parse(text)); }

QExpansion qexpansion_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    auto [n, k] = dims_of(j, "box");
    QExpansion e{Box(n, k), {}};
    for (const auto& t : j.at("terms")) {
      const Partition nu = partition_of(t.at("nu"));
      for (const auto& [d, c] : t.at("coeffs").items()) e.add(nu, std::stoi(d), coeff_from_json(c));
    }
    return e;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed expansion: ") + e.what());
  }
}

FusionExpansion fusion_expansion_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    auto [n, k] = dims_of(j, "level");
    FusionExpansion e{FusionLevel(n, k), {}};
    for (const auto& t : j.at("terms")) e.add(partition_of(t.at("nu")), coeff_from_json(t.at("coeff")));
    return e;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed fusion expansion: ") + e.what());
  }
}

}  // namespace qhf
