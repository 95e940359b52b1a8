#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "harbourne/bounds.hpp"
#include "harbourne/core.hpp"
#include "harbourne/error.hpp"

namespace harbourne {

/// Combinatorics of a known line arrangement together with where the data comes from.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::string provenance;
  ArrangementCombinatorics combinatorics;
};

namespace detail {

inline CatalogEntry validated_entry(std::string name, std::string description, std::string provenance,
                                    std::int64_t tau, ArrangementCombinatorics::Counts t) {
  CatalogEntry entry{std::move(name), std::move(description), std::move(provenance),
                     ArrangementCombinatorics::uniform(1, tau, std::move(t))};
  const auto& comb = entry.combinatorics;
  const auto identity = check_incidence_identity(comb, PolarizationData::plane_line());
  if (!identity.holds) {
    throw ConsistencyError("catalog entry '" + entry.name + "' violates the incidence identity (discrepancy " +
                           to_string(identity.discrepancy) + ")");
  }
  if (comb.t(comb.tau()) == 0 && !singular_point_count_check(comb).holds) {
    throw ConsistencyError("catalog entry '" + entry.name + "' has fewer singular points than lines");
  }
  return entry;
}

}  // namespace detail

/// All registered arrangements. Every entry is validated when the registry is first built.
inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    out.push_back(detail::validated_entry(
        "wiman45", "Wiman arrangement: 45 lines invariant under the Valentiner group",
        "classical (Wiman 1896); least known linear Harbourne constant -225/67", 45, {{3, 120}, {4, 45}, {5, 36}}));
    out.push_back(detail::validated_entry("klein21", "Klein arrangement: 21 lines invariant under PSL(2,7)",
                                          "classical (Klein 1879)", 21, {{3, 28}, {4, 21}}));
    out.push_back(detail::validated_entry(
        "hesse12", "Hesse arrangement: the 12 lines of the four singular members of the Hesse pencil",
        "classical (Hesse 1844); not realizable over the reals", 12, {{2, 12}, {4, 9}}));
    out.push_back(detail::validated_entry(
        "dual_hesse9", "dual Hesse arrangement: 9 lines with 12 triple points",
        "classical; equals the Fermat arrangement for n = 3; needs cube roots of unity, so only the combinatorics "
        "is cataloged",
        9, {{3, 12}}));
    out.push_back(detail::validated_entry("fermat4", "Fermat arrangement (x^4-y^4)(y^4-z^4)(z^4-x^4) = 0",
                                          "classical Fermat family, n = 4: t_3 = n^2, t_n = 3", 12,
                                          {{3, 16}, {4, 3}}));
    out.push_back(detail::validated_entry("fermat5", "Fermat arrangement (x^5-y^5)(y^5-z^5)(z^5-x^5) = 0",
                                          "classical Fermat family, n = 5: t_3 = n^2, t_n = 3", 15,
                                          {{3, 25}, {5, 3}}));
    return out;
  }();
  return entries;
}

inline const CatalogEntry& catalog(std::string_view name) {
  for (const auto& entry : catalog_entries()) {
    if (entry.name == name) return entry;
  }
  throw UnknownEntryError("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace harbourne
