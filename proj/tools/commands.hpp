#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "harbourne/harbourne.hpp"

// Command implementations behind the harbourne tool. Each returns a JSON tree
// (document keys plus "result") and the exit code; rendering happens in main.

namespace harbourne::cli {

enum ExitCode : int { ok = 0, check_failed = 1, input_error = 2 };

struct Outcome {
  Json output;
  int exit_code = ExitCode::ok;
  std::vector<std::string> warnings;
};

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Json counts_json(const ArrangementCombinatorics& comb) {
  Json t = Json::object();
  for (const auto& [r, count] : comb.counts()) t[std::to_string(r)] = harbourne::detail::integer_json(count);
  return t;
}

inline Json bound_json(const BoundReport& r) {
  Json out;
  out["name"] = r.name;
  out["status"] = std::string(r.holds ? "holds" : "fails") + (r.hypotheses_met ? "" : " [hypotheses not met]");
  out["lhs"] = rational_json(r.lhs);
  out["rhs"] = rational_json(r.rhs);
  out["slack"] = rational_json(r.slack);
  out["holds"] = r.holds;
  out["hypotheses_met"] = r.hypotheses_met;
  out["unmet_hypotheses"] = r.unmet_hypotheses;
  out["notes"] = r.notes;
  out["statement"] = r.statement;
  return out;
}

/// Same columns as bound_json so tables line up; the values are null.
inline Json not_applicable_json(const std::string& name, const std::string& reason) {
  Json out;
  out["name"] = name;
  out["status"] = "not-applicable";
  for (const char* key : {"lhs", "rhs", "slack", "holds"}) out[key] = nullptr;
  out["hypotheses_met"] = false;
  out["unmet_hypotheses"] = Json::array({reason});
  out["notes"] = Json::array();
  out["statement"] = "";
  return out;
}

inline Json document_json(const ArrangementDocument& doc, Json result) {
  Json out = to_json(doc);
  out["result"] = std::move(result);
  return out;
}

// Input loading --------------------------------------------------------------

inline std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// A document from a JSON file, or from the catalog when `catalog_name` is set.
inline ArrangementDocument load_document(const std::string& path, const std::string& catalog_name) {
  if (!catalog_name.empty()) {
    const auto& entry = catalog(catalog_name);
    return plane_document(entry.combinatorics, entry.provenance);
  }
  if (path.empty()) throw InputError("no input: give a document file, '-' for stdin, or --catalog NAME");
  try {
    return parse_document_text(read_source(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline bool plane_setting(const ArrangementDocument& doc) {
  return doc.surface == SurfaceInvariants::projective_plane() && doc.polarization == PolarizationData::plane_line();
}

// validate -------------------------------------------------------------------

inline Outcome cmd_validate(const ArrangementDocument& doc) {
  const auto& comb = doc.combinatorics;
  const auto& pol = doc.polarization;
  Json checks = Json::array();
  bool all_pass = true;
  auto add = [&](const std::string& name, std::optional<bool> pass, const std::string& detail) {
    Json row;
    row["check"] = name;
    row["status"] = !pass ? "skipped" : (*pass ? "pass" : "fail");
    row["detail"] = detail;
    checks.push_back(std::move(row));
    if (pass && !*pass) all_pass = false;
  };

  const Integer sum = comb.degree_sum();
  const Integer lhs = pol.a_sq * (sum * sum - comb.degree_square_sum());
  const Integer rhs = f_moment(comb, 2) - f_moment(comb, 1);
  add("incidence-identity", lhs == rhs,
      "A^2((sum d)^2 - sum d^2) = " + to_string(lhs) + ", f2 - f1 = " + to_string(rhs) + ", discrepancy " +
          to_string(Integer(lhs - rhs)));

  add("degree-parity", comb.degree_parity_ok(),
      comb.degree_parity_ok() ? "all degrees even or at least two odd" : "exactly one odd degree");

  std::string genus_detail = "A^2 d^2 + (K.A) d even for every component";
  bool genus_ok = true;
  for (std::size_t i = 0; i < comb.degrees().size(); ++i) {
    const Integer& d = comb.degrees()[i];
    if ((pol.a_sq * d * d + pol.ka * d) % 2 != 0) {
      genus_ok = false;
      genus_detail = "odd adjunction value for d_" + std::to_string(i + 1) + " = " + to_string(d);
      break;
    }
  }
  add("genus-integrality", genus_ok, genus_detail);

  if (!plane_setting(doc)) {
    add("point-count", std::nullopt, "only for curves in the plane with A a line");
  } else if (!comb.uniform_degree()) {
    add("point-count", std::nullopt, "components of different degrees");
  } else if (comb.t(comb.tau()) != 0) {
    add("point-count", std::nullopt, "t_tau != 0");
  } else {
    const auto report = singular_point_count_check(comb);
    add("point-count", report.holds, "s = " + to_string(report.lhs) + ", tau = " + to_string(report.rhs));
  }

  Json result;
  result["checks"] = std::move(checks);
  result["all_pass"] = all_pass;
  return {document_json(doc, std::move(result)), all_pass ? ExitCode::ok : ExitCode::check_failed, {}};
}

// hconst ---------------------------------------------------------------------

inline Outcome cmd_hconst(const ArrangementDocument& doc) {
  const auto& comb = doc.combinatorics;
  const Rational h = harbourne_constant(comb, doc.polarization);
  Json result;
  result["h"] = rational_json(h);
  result["strict_transform_sq"] = harbourne::detail::integer_json(strict_transform_self_intersection(comb, doc.polarization));
  result["s"] = harbourne::detail::integer_json(f_moment(comb, 0));
  result["d_sq"] = harbourne::detail::integer_json(d_squared(comb, doc.polarization));
  result["f1"] = harbourne::detail::integer_json(f_moment(comb, 1));
  result["f2"] = harbourne::detail::integer_json(f_moment(comb, 2));
  result["below_minus_4"] = h < -4;
  return {document_json(doc, std::move(result)), ExitCode::ok, {}};
}

// chern ----------------------------------------------------------------------

enum class ChernMode { automatic, general, plane };

inline Json normalization_json(const Normalization& norm) {
  return to_string(norm.base) + "^" + std::to_string(norm.exponent);
}

inline Outcome cmd_chern(const ArrangementDocument& doc, std::int64_t n, ChernMode mode, bool unnormalized) {
  const auto& comb = doc.combinatorics;
  if (mode == ChernMode::automatic) {
    mode = plane_setting(doc) && comb.uniform_degree() ? ChernMode::plane : ChernMode::general;
  }
  Json result;
  if (mode == ChernMode::general) {
    if (n != 2) throw PreconditionError("general-surface cover formulas exist only for n = 2 (got n = " + std::to_string(n) + ")");
    const auto cover = CoverParams::double_cover(comb);
    const Rational c2 = cover_c2_general(doc.surface, doc.polarization, comb, cover);
    const Rational c1sq = cover_c1sq_general(doc.surface, doc.polarization, comb, cover);
    const Rational gap = miyaoka_gap_general(doc.surface, doc.polarization, comb, cover);
    const auto norm = general_normalization(comb);
    result["mode"] = "general";
    result["n"] = n;
    result["delta"] = cover.delta;
    result["normalization"] = normalization_json(norm);
    result["c2"] = rational_json(c2);
    result["c1_sq"] = rational_json(c1sq);
    result["chern_gap"] = rational_json(gap);
    if (unnormalized) {
      result["unnormalized"] = {{"c2", rational_json(norm.unnormalize(c2))},
                                {"c1_sq", rational_json(norm.unnormalize(c1sq))},
                                {"chern_gap", rational_json(norm.unnormalize(gap))}};
    }
    return {document_json(doc, std::move(result)), ExitCode::ok, {}};
  }

  if (!plane_setting(doc)) {
    throw HypothesisError("plane cover formulas need surface P2 with polarization P2-line");
  }
  const Rational c2 = cover_c2_p2(n, comb);
  const Rational c1sq = cover_c1sq_p2(n, comb);
  const Rational gap = miyaoka_gap_p2(n, comb);
  const auto norm = plane_normalization(n, comb);
  const auto nef = nef_certificate(n, comb);
  result["mode"] = "p2";
  result["n"] = n;
  result["normalization"] = normalization_json(norm);
  result["c2"] = rational_json(c2);
  result["c1_sq"] = rational_json(c1sq);
  result["chern_gap"] = rational_json(gap);
  result["canonical_sq"] = rational_json(nef.canonical_square);
  Json exceptional = Json::array();
  for (const auto& e : nef.exceptional) {
    exceptional.push_back({{"k", e.multiplicity},
                           {"K.E", rational_json(e.value)},
                           {"lower_bound", rational_json(e.lower_bound)},
                           {"nonneg", e.nonneg}});
  }
  result["nef"] = {{"nef", nef.nef},
                   {"big", nef.big},
                   {"sufficient_condition_only", nef.sufficient_condition_only},
                   {"generic_lower_bound", rational_json(nef.generic_lower_bound)},
                   {"violations", nef.violations}};
  result["exceptional"] = std::move(exceptional);
  if (unnormalized) {
    result["unnormalized"] = {{"c2", rational_json(norm.unnormalize(c2))},
                              {"c1_sq", rational_json(norm.unnormalize(c1sq))},
                              {"chern_gap", rational_json(norm.unnormalize(gap))}};
  }
  return {document_json(doc, std::move(result)), ExitCode::ok, {}};
}

// bounds ---------------------------------------------------------------------

inline Outcome cmd_bounds(const ArrangementDocument& doc, const std::vector<std::string>& names, bool formal) {
  const Evaluation mode = formal ? Evaluation::formal : Evaluation::strict;
  Json bounds = Json::array();
  Outcome outcome;
  const bool all = names.empty();
  std::vector<std::string> selected = names;
  if (all) {
    for (const auto& entry : bound_registry()) selected.push_back(entry.name);
  }
  for (const auto& name : selected) {
    if (all) {
      try {
        const auto report = evaluate_bound(name, doc.surface, doc.polarization, doc.combinatorics, mode);
        if (!report.hypotheses_met) outcome.warnings.push_back(name + ": evaluated outside its hypotheses");
        if (!report.holds) outcome.exit_code = ExitCode::check_failed;
        bounds.push_back(bound_json(report));
      } catch (const HypothesisError& e) {
        bounds.push_back(not_applicable_json(name, e.what()));
      } catch (const PreconditionError& e) {
        bounds.push_back(not_applicable_json(name, e.what()));
      }
    } else {
      const auto report = evaluate_bound(name, doc.surface, doc.polarization, doc.combinatorics, mode);
      if (!report.hypotheses_met) outcome.warnings.push_back(name + ": evaluated outside its hypotheses");
      if (!report.holds) outcome.exit_code = ExitCode::check_failed;
      bounds.push_back(bound_json(report));
    }
  }
  Json result;
  result["evaluation"] = formal ? "formal" : "strict";
  result["bounds"] = std::move(bounds);
  outcome.output = document_json(doc, std::move(result));
  return outcome;
}

// search ---------------------------------------------------------------------

struct SearchRequest {
  Integer d = 3;
  std::int64_t tau_min = 4;
  std::int64_t tau_max = 4;
  bool hirzebruch = false;
  bool point_count = false;
  std::map<std::int64_t, CountRange> caps;
  SearchOptions options;
  std::optional<std::uint64_t> enumerate;  ///< list admissible vectors instead of minimizing
};

/// "4" or "4..9".
inline std::pair<std::int64_t, std::int64_t> parse_tau_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& part) {
    const Integer z = parse_integer(part);
    if (z < 0 || z > 100000) throw InputError("tau out of range: '" + part + "'");
    return static_cast<std::int64_t>(z);
  };
  if (dots == std::string::npos) {
    const auto tau = number(text);
    return {tau, tau};
  }
  const auto lo = number(text.substr(0, dots));
  const auto hi = number(text.substr(dots + 2));
  if (lo > hi) throw InputError("empty tau range '" + text + "'");
  return {lo, hi};
}

/// "r=lo:hi" with either end optional: "3=2:", "2=:0", "5=1:1".
inline std::pair<std::int64_t, CountRange> parse_cap(const std::string& text) {
  const auto eq = text.find('=');
  const auto colon = text.find(':', eq == std::string::npos ? 0 : eq);
  if (eq == std::string::npos || colon == std::string::npos) {
    throw InputError("cap '" + text + "': expected r=lo:hi");
  }
  try {
    const Integer r = parse_integer(text.substr(0, eq));
    if (r < 2 || r > 100000) throw InputError("multiplicity out of range");
    CountRange range;
    const std::string lo = text.substr(eq + 1, colon - eq - 1);
    const std::string hi = text.substr(colon + 1);
    if (!lo.empty()) range.min = parse_integer(lo);
    if (!hi.empty()) range.max = parse_integer(hi);
    return {static_cast<std::int64_t>(r), range};
  } catch (const InputError& e) {
    throw InputError("cap '" + text + "': " + e.what());
  }
}

inline Json search_row_json(const SearchProblem& problem, const SearchResult& result) {
  Json row;
  row["tau"] = problem.tau;
  row["status"] = to_string(result.status);
  row["best_h"] = result.best_h ? rational_json(*result.best_h) : Json();
  row["best_t"] = result.best ? counts_json(*result.best) : Json();
  row["admissible_visited"] = result.admissible_visited;
  row["nodes"] = result.nodes;
  const Rational bound = degree_harbourne_lower_bound(problem.d);
  row["degree_bound"] = rational_json(bound);
  row["above_degree_bound"] = result.best_h ? Json(*result.best_h >= bound) : Json();
  row["bnc_threshold_candidate"] = result.best_h ? Json(*result.best_h < -4) : Json();
  return row;
}

inline Json constraints_json(const SearchRequest& req) {
  Json c = Json::array({"incidence", "no-tau-fold"});
  if (req.hirzebruch) c.push_back("hirzebruch");
  if (req.point_count) c.push_back("point-count");
  return c;
}

inline Outcome cmd_search(const SearchRequest& req) {
  if (req.enumerate) {
    if (req.tau_min != req.tau_max) throw InputError("--enumerate needs a single tau");
    SearchProblem problem{req.d, req.tau_min, req.hirzebruch, req.point_count, req.caps};
    Json vectors = Json::array();
    const auto summary = enumerate_admissible(problem, *req.enumerate, [&](const ArrangementCombinatorics& comb) {
      vectors.push_back({{"t", counts_json(comb)}, {"h", rational_json(harbourne_constant(comb, PolarizationData::plane_line()))}});
      return true;
    });
    Json result;
    result["label"] = "admissible combinatorics (realizability not certified)";
    result["d"] = harbourne::detail::integer_json(req.d);
    result["tau"] = req.tau_min;
    result["constraints"] = constraints_json(req);
    result["emitted"] = summary.emitted;
    result["complete"] = summary.complete;
    result["vectors"] = std::move(vectors);
    Json out;
    out["result"] = std::move(result);
    return {std::move(out), summary.emitted == 0 ? ExitCode::check_failed : ExitCode::ok, {}};
  }

  Json out;
  Json result;
  result["label"] = "admissible combinatorics (realizability not certified)";
  result["d"] = harbourne::detail::integer_json(req.d);
  result["constraints"] = constraints_json(req);
  int exit_code = ExitCode::ok;
  if (req.tau_min == req.tau_max) {
    SearchProblem problem{req.d, req.tau_min, req.hirzebruch, req.point_count, req.caps};
    const auto found = minimize_h(problem, req.options);
    const Json row = search_row_json(problem, found);
    for (const auto& [key, value] : row.items()) result[key] = value;
    result["exhaustive"] = found.exhaustive();
    if (found.best) {
      out = to_json(plane_document(*found.best, "search minimum"));
    } else {
      exit_code = ExitCode::check_failed;
    }
  } else {
    if (!req.caps.empty()) throw InputError("--cap needs a single tau");
    Json rows = Json::array();
    for (std::int64_t tau = req.tau_min; tau <= req.tau_max; ++tau) {
      SearchProblem problem{req.d, tau, req.hirzebruch, req.point_count, {}};
      const auto found = minimize_h(problem, req.options);
      if (!found.best) exit_code = ExitCode::check_failed;
      rows.push_back(search_row_json(problem, found));
    }
    result["rows"] = std::move(rows);
  }
  out["result"] = std::move(result);
  return {std::move(out), exit_code, {}};
}

// geom -----------------------------------------------------------------------

inline Outcome cmd_geom(const std::string& path) {
  LineArrangement arrangement = [&] {
    if (path == "-") return parse_lines(std::cin, "<stdin>");
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    return parse_lines(in, path);
  }();
  const auto locus = singular_locus(arrangement);
  const auto comb = combinatorics_from_locus(locus);
  Json points = Json::array();
  for (const auto& [point, through] : locus.incidences()) {
    Json lines = Json::array();
    for (auto i : through) lines.push_back(i + 1);
    points.push_back({{"point", point.str()}, {"k", through.size()}, {"lines", std::move(lines)}});
  }
  Json result;
  result["lines"] = arrangement.size();
  result["s"] = locus.size();
  result["h"] = rational_json(harbourne_constant(comb, PolarizationData::plane_line()));
  result["points"] = std::move(points);
  return {document_json(plane_document(comb, "line arrangement " + path), std::move(result)), ExitCode::ok, {}};
}

// catalog --------------------------------------------------------------------

inline Outcome cmd_catalog(const std::optional<std::string>& name) {
  if (!name) {
    Json entries = Json::array();
    for (const auto& entry : catalog_entries()) {
      Json e;
      e["name"] = entry.name;
      const Json doc = to_json(plane_document(entry.combinatorics, entry.provenance));
      for (const auto& [key, value] : doc.items()) e[key] = value;
      e["h"] = rational_json(harbourne_constant(entry.combinatorics, PolarizationData::plane_line()));
      entries.push_back(std::move(e));
    }
    Json out;
    out["result"] = {{"entries", std::move(entries)}};
    return {std::move(out), ExitCode::ok, {}};
  }
  const auto& entry = catalog(*name);
  Json result;
  result["name"] = entry.name;
  result["description"] = entry.description;
  result["h"] = rational_json(harbourne_constant(entry.combinatorics, PolarizationData::plane_line()));
  result["s"] = harbourne::detail::integer_json(f_moment(entry.combinatorics, 0));
  return {document_json(plane_document(entry.combinatorics, entry.provenance), std::move(result)), ExitCode::ok, {}};
}

}  // namespace harbourne::cli
