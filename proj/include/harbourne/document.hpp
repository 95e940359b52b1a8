#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "harbourne/core.hpp"
#include "harbourne/error.hpp"
#include "harbourne/rational.hpp"

// ArrangementDocument: the JSON input of the command-line tool.
//
//   {
//     "surface": "P2" | {"c1_sq": 9, "c2": 3, "kodaira_nonneg": false},
//     "polarization": "P2-line" | {"a_sq": 1, "ka": -3},
//     "combinatorics": {"tau": 4, "d": 3 | "degrees": [3, 3, 3, 3], "t": {"2": 54}},
//     "provenance": "optional free text"
//   }
//
// Missing surface / polarization blocks default to the presets. Integers may
// be JSON numbers or decimal strings (for values beyond 64 bits). Unknown
// keys are ignored so command output can be fed back in.

namespace harbourne {

/// Insertion-ordered JSON, so emitted documents keep a stable field order.
using Json = nlohmann::ordered_json;

struct ArrangementDocument {
  SurfaceInvariants surface = SurfaceInvariants::projective_plane();
  std::optional<std::string> surface_preset = "P2";
  PolarizationData polarization = PolarizationData::plane_line();
  std::optional<std::string> polarization_preset = "P2-line";
  ArrangementCombinatorics combinatorics = ArrangementCombinatorics::uniform(1, 2, {{2, 1}});
  std::optional<std::string> provenance;
};

namespace detail {

inline std::string join_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

inline Integer json_integer(const Json& value, const std::string& path) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(value.get<std::uint64_t>());
    return Integer(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    try {
      return parse_integer(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  throw InputError(path + ": expected an integer, got " + std::string(value.type_name()));
}

inline std::int64_t json_small_integer(const Json& value, const std::string& path) {
  const Integer z = json_integer(value, path);
  if (z > std::numeric_limits<std::int32_t>::max() || z < std::numeric_limits<std::int32_t>::min()) {
    throw InputError(path + ": value " + to_string(z) + " out of range");
  }
  return static_cast<std::int64_t>(z);
}

inline const Json& require_key(const Json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(join_path(path, key) + ": missing required field");
  return *it;
}

inline Json integer_json(const Integer& z) {
  if (z <= std::numeric_limits<std::int64_t>::max() && z >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(z);
  }
  return z.str();
}

inline SurfaceInvariants parse_surface(const Json& node, std::optional<std::string>& preset) {
  if (node.is_string()) {
    if (node.get<std::string>() != "P2") throw InputError("surface: unknown preset '" + node.get<std::string>() + "'");
    preset = "P2";
    return SurfaceInvariants::projective_plane();
  }
  if (!node.is_object()) throw InputError("surface: expected \"P2\" or an object");
  preset.reset();
  SurfaceInvariants s;
  s.c1_sq = json_integer(require_key(node, "c1_sq", "surface"), "surface.c1_sq");
  s.c2 = json_integer(require_key(node, "c2", "surface"), "surface.c2");
  if (const auto it = node.find("kodaira_nonneg"); it != node.end()) {
    if (!it->is_boolean()) throw InputError("surface.kodaira_nonneg: expected a boolean");
    s.kodaira_nonneg = it->get<bool>();
  }
  return s;
}

inline PolarizationData parse_polarization(const Json& node, std::optional<std::string>& preset) {
  if (node.is_string()) {
    if (node.get<std::string>() != "P2-line") {
      throw InputError("polarization: unknown preset '" + node.get<std::string>() + "'");
    }
    preset = "P2-line";
    return PolarizationData::plane_line();
  }
  if (!node.is_object()) throw InputError("polarization: expected \"P2-line\" or an object");
  preset.reset();
  PolarizationData p{json_integer(require_key(node, "a_sq", "polarization"), "polarization.a_sq"),
                     json_integer(require_key(node, "ka", "polarization"), "polarization.ka")};
  if (p.a_sq < 0) throw InputError("polarization.a_sq: must be non-negative");
  return p;
}

inline ArrangementCombinatorics parse_combinatorics(const Json& node) {
  if (!node.is_object()) throw InputError("combinatorics: expected an object");
  std::vector<Integer> degrees;
  std::optional<std::int64_t> tau;
  if (const auto it = node.find("tau"); it != node.end()) tau = json_small_integer(*it, "combinatorics.tau");
  if (const auto it = node.find("degrees"); it != node.end()) {
    if (!it->is_array()) throw InputError("combinatorics.degrees: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      degrees.push_back(json_integer((*it)[i], "combinatorics.degrees[" + std::to_string(i) + "]"));
    }
    if (tau && *tau != static_cast<std::int64_t>(degrees.size())) {
      throw InputError("combinatorics.tau: " + std::to_string(*tau) + " does not match " +
                       std::to_string(degrees.size()) + " degrees");
    }
  } else if (const auto d = node.find("d"); d != node.end()) {
    if (!tau) throw InputError("combinatorics.tau: required when a uniform degree d is given");
    if (*tau < 2) throw InputError("combinatorics.tau: must be >= 2");
    degrees.assign(static_cast<std::size_t>(*tau), json_integer(*d, "combinatorics.d"));
  } else {
    throw InputError("combinatorics: need either \"degrees\" or \"d\" with \"tau\"");
  }

  ArrangementCombinatorics::Counts t;
  if (const auto it = node.find("t"); it != node.end()) {
    if (!it->is_object()) throw InputError("combinatorics.t: expected an object {\"r\": t_r}");
    for (const auto& [key, value] : it->items()) {
      const std::string path = "combinatorics.t." + key;
      std::int64_t r = 0;
      try {
        const Integer parsed = parse_integer(key);
        if (parsed > std::numeric_limits<std::int32_t>::max() || parsed < 0) throw InputError("out of range");
        r = static_cast<std::int64_t>(parsed);
      } catch (const InputError&) {
        throw InputError(path + ": key must be a multiplicity r >= 2");
      }
      t[r] = json_integer(value, path);
    }
  }
  try {
    return ArrangementCombinatorics(std::move(degrees), std::move(t));
  } catch (const PreconditionError& e) {
    throw InputError(std::string("combinatorics: ") + e.what());
  }
}

}  // namespace detail

inline ArrangementDocument parse_document(const Json& root) {
  if (!root.is_object()) throw InputError("document: expected a JSON object");
  ArrangementDocument doc;
  if (const auto it = root.find("surface"); it != root.end()) doc.surface = detail::parse_surface(*it, doc.surface_preset);
  if (const auto it = root.find("polarization"); it != root.end()) {
    doc.polarization = detail::parse_polarization(*it, doc.polarization_preset);
  }
  doc.combinatorics = detail::parse_combinatorics(detail::require_key(root, "combinatorics", ""));
  if (const auto it = root.find("provenance"); it != root.end()) {
    if (!it->is_string()) throw InputError("provenance: expected a string");
    doc.provenance = it->get<std::string>();
  }
  return doc;
}

inline ArrangementDocument parse_document_text(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(root);
}

inline Json combinatorics_json(const ArrangementCombinatorics& comb) {
  Json out;
  out["tau"] = comb.tau();
  if (const auto d = comb.uniform_degree()) {
    out["d"] = detail::integer_json(*d);
  } else {
    out["degrees"] = Json::array();
    for (const auto& d : comb.degrees()) out["degrees"].push_back(detail::integer_json(d));
  }
  out["t"] = Json::object();
  for (const auto& [r, count] : comb.counts()) out["t"][std::to_string(r)] = detail::integer_json(count);
  return out;
}

inline Json to_json(const ArrangementDocument& doc) {
  Json out;
  if (doc.surface_preset) {
    out["surface"] = *doc.surface_preset;
  } else {
    out["surface"] = {{"c1_sq", detail::integer_json(doc.surface.c1_sq)},
                      {"c2", detail::integer_json(doc.surface.c2)},
                      {"kodaira_nonneg", doc.surface.kodaira_nonneg}};
  }
  if (doc.polarization_preset) {
    out["polarization"] = *doc.polarization_preset;
  } else {
    out["polarization"] = {{"a_sq", detail::integer_json(doc.polarization.a_sq)},
                           {"ka", detail::integer_json(doc.polarization.ka)}};
  }
  out["combinatorics"] = combinatorics_json(doc.combinatorics);
  if (doc.provenance) out["provenance"] = *doc.provenance;
  return out;
}

/// A document for plane combinatorics with the presets.
inline ArrangementDocument plane_document(ArrangementCombinatorics comb, std::optional<std::string> provenance = {}) {
  ArrangementDocument doc;
  doc.combinatorics = std::move(comb);
  doc.provenance = std::move(provenance);
  return doc;
}

}  // namespace harbourne
