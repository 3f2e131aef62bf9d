#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdt/canonical.hpp"
#include "sdt/rational.hpp"
#include "sdt/set_function.hpp"
#include "sdt/structure.hpp"

namespace sdt {

// File format for set functions, dense form:
//   {"ground_set": ["a","b",...], "values": ["v0", ..., "v_{2^n-1}"]}
// with values indexed by bitmask and written as exact "p/q" / integer /
// decimal strings. A sparse alternative is accepted on load:
//   {"ground_set": [...], "default": "v", "entries": {"a,c": "v", ...}}
// Writing always emits the dense form, canonically formatted, so
// gen -> file -> load -> file round-trips byte-identically.

namespace detail {

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
  throw std::invalid_argument(
      "set-function values must be exact strings (\"p/q\" or decimal) or integers; "
      "got: " + j.dump());
}

inline GroundSet ground_from_json(const nlohmann::json& j, bool allow_large) {
  if (!j.contains("ground_set") || !j.at("ground_set").is_array()) {
    throw std::invalid_argument("missing \"ground_set\" array");
  }
  std::vector<std::string> names;
  for (const auto& item : j.at("ground_set")) {
    if (!item.is_string()) throw std::invalid_argument("ground-set names must be strings");
    names.push_back(item.get<std::string>());
  }
  return GroundSet(std::move(names), allow_large);
}

}  // namespace detail

inline SetFunction set_function_from_json(const nlohmann::json& j, bool allow_large = false,
                                          std::string provenance = "") {
  if (!j.is_object()) throw std::invalid_argument("set-function file must be a JSON object");
  GroundSet ground = detail::ground_from_json(j, allow_large);

  if (j.contains("values")) {
    const auto& values_json = j.at("values");
    if (!values_json.is_array() || values_json.size() != ground.subset_count()) {
      throw std::invalid_argument("\"values\" must list exactly 2^n entries");
    }
    std::vector<Rational> values;
    values.reserve(values_json.size());
    for (const auto& v : values_json) values.push_back(detail::rational_from_json(v));
    return SetFunction(std::move(ground), std::move(values), std::move(provenance));
  }

  if (j.contains("default") || j.contains("entries")) {
    Rational fallback = j.contains("default") ? detail::rational_from_json(j.at("default"))
                                              : Rational(0);
    std::vector<Rational> values(ground.subset_count(), fallback);
    if (j.contains("entries")) {
      if (!j.at("entries").is_object()) throw std::invalid_argument("\"entries\" must be an object");
      std::vector<bool> seen(ground.subset_count(), false);
      for (const auto& [key, value] : j.at("entries").items()) {
        Mask m = ground.parse_subset(key);
        if (seen[m]) throw std::invalid_argument("duplicate sparse entry for subset {" + key + "}");
        seen[m] = true;
        values[m] = detail::rational_from_json(value);
      }
    }
    return SetFunction(std::move(ground), std::move(values), std::move(provenance));
  }

  throw std::invalid_argument("set-function file needs \"values\" or \"default\"/\"entries\"");
}

inline nlohmann::json set_function_to_json(const SetFunction& f) {
  nlohmann::json j;
  j["ground_set"] = f.ground().names();
  nlohmann::json values = nlohmann::json::array();
  for (const Rational& v : f.values()) values.push_back(format_rational(v));
  j["values"] = std::move(values);
  return j;
}

/// Canonical on-disk text: 2-space indent, sorted keys, trailing newline.
inline std::string canonical_file_text(const SetFunction& f) {
  return set_function_to_json(f).dump(2) + "\n";
}

inline void save_set_function(const SetFunction& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << canonical_file_text(f);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

inline SetFunction load_set_function(const std::string& path, bool allow_large = false) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
  return set_function_from_json(j, allow_large, "file:" + path);
}

inline nlohmann::json subset_to_json(const GroundSet& ground, Mask m) {
  return nlohmann::json(ground.names_of(m));
}

inline nlohmann::json face_to_json(const GroundSet& ground, const TwoFace& p) {
  nlohmann::json j;
  j["base"] = subset_to_json(ground, p.base);
  j["pair"] = nlohmann::json::array({ground.name(p.u), ground.name(p.v)});
  return j;
}

/// {"edges": [["a","c"], ...], "components": [["a","c"],["b"]]} with edges
/// sorted lexicographically by name pair.
inline nlohmann::json graph_to_json(const InequalityGraph& graph) {
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(graph.edges.size());
  for (auto [u, v] : graph.edges) {
    std::string a = graph.ground.name(u);
    std::string b = graph.ground.name(v);
    if (b < a) std::swap(a, b);
    edges.emplace_back(std::move(a), std::move(b));
  }
  std::sort(edges.begin(), edges.end());

  nlohmann::json j;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edges) j["edges"].push_back(nlohmann::json::array({a, b}));
  j["components"] = nlohmann::json::array();
  for (const auto& component : graph.components) {
    nlohmann::json names = nlohmann::json::array();
    for (unsigned v : component) names.push_back(graph.ground.name(v));
    j["components"].push_back(std::move(names));
  }
  return j;
}

inline nlohmann::json decomposition_to_json(const GroundSet& ground, const Decomposition& d) {
  nlohmann::json j;
  j["parts"] = nlohmann::json::array();
  for (const auto& part : d.parts) {
    nlohmann::json names = nlohmann::json::array();
    for (unsigned v : part) names.push_back(ground.name(v));
    j["parts"].push_back(std::move(names));
  }
  j["verified"] = d.verified;
  j["verification"] = d.exhaustive ? "exhaustive" : "sampled";
  j["checked_subsets"] = d.checked_subsets;
  return j;
}

/// {"status": ..., "blocks": ..., "representative": ..., "solution_count_log2": k}
/// for feasible systems; {"status": "infeasible", "conflict": {...}} otherwise.
inline nlohmann::json solver_report_to_json(const GroundSet& ground, const ParitySystem& system,
                                            const std::optional<SolutionFamily>& family) {
  nlohmann::json j;
  if (family) {
    j["status"] = "feasible";
    j["blocks"] = nlohmann::json::array();
    for (const auto& block : family->blocks()) {
      nlohmann::json names = nlohmann::json::array();
      for (unsigned v : block) names.push_back(ground.name(v));
      j["blocks"].push_back(std::move(names));
    }
    j["representative"] = subset_to_json(ground, family->representative());
    j["solution_count_log2"] = family->free_bit_count();
    return j;
  }
  j["status"] = "infeasible";
  if (system.conflict) {
    const ParityConflict& c = *system.conflict;
    nlohmann::json conflict;
    conflict["pair"] = nlohmann::json::array({ground.name(c.pair.first), ground.name(c.pair.second)});
    conflict["witnesses"] = nlohmann::json::array();
    nlohmann::json pos = face_to_json(ground, c.positive_witness);
    pos["parity"] = 0;
    nlohmann::json neg = face_to_json(ground, c.negative_witness);
    neg["parity"] = 1;
    conflict["witnesses"].push_back(std::move(pos));
    conflict["witnesses"].push_back(std::move(neg));
    j["conflict"] = std::move(conflict);
  } else {
    j["conflict"] = {{"cycle", "parity demands form an odd cycle"}};
  }
  return j;
}

}  // namespace sdt
