#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "harbourne/chern.hpp"
#include "harbourne/core.hpp"
#include "harbourne/error.hpp"
#include "harbourne/rational.hpp"

// Exact projective geometry over Q for line arrangements.

namespace harbourne {

namespace detail {

/// Scales a non-zero rational triple to the primitive integer vector whose first non-zero entry is positive.
inline std::array<Integer, 3> canonical_triple(const std::array<Rational, 3>& v, const char* what) {
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw PreconditionError(std::string(what) + " with all coordinates zero");
  Integer lcm = 1;
  for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator_of(x));
  std::array<Integer, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = numerator_of(v[i]) * (lcm / denominator_of(v[i]));
  Integer g = 0;
  for (const auto& x : out) g = boost::multiprecision::gcd(g, abs(x));
  const auto lead = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
  if (*lead < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

inline bool triple_less(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string triple_string(const std::array<Integer, 3>& v) {
  return "[" + v[0].str() + ":" + v[1].str() + ":" + v[2].str() + "]";
}

}  // namespace detail

/// Point of P^2(Q) in canonical homogeneous coordinates.
class ProjPoint {
 public:
  ProjPoint(const Rational& x, const Rational& y, const Rational& z)
      : coords_(detail::canonical_triple({x, y, z}, "projective point")) {}

  const std::array<Integer, 3>& coords() const { return coords_; }
  std::string str() const { return detail::triple_string(coords_); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return detail::triple_less(a.coords_, b.coords_); }

 private:
  std::array<Integer, 3> coords_;
};

/// Line a x + b y + c z = 0 with canonical coefficients.
class ProjLine {
 public:
  ProjLine(const Rational& a, const Rational& b, const Rational& c)
      : coeffs_(detail::canonical_triple({a, b, c}, "projective line")) {}

  const std::array<Integer, 3>& coeffs() const { return coeffs_; }
  std::string str() const { return detail::triple_string(coeffs_); }

  bool contains(const ProjPoint& p) const {
    const auto& x = p.coords();
    return coeffs_[0] * x[0] + coeffs_[1] * x[1] + coeffs_[2] * x[2] == 0;
  }

  friend bool operator==(const ProjLine&, const ProjLine&) = default;
  friend bool operator<(const ProjLine& a, const ProjLine& b) { return detail::triple_less(a.coeffs_, b.coeffs_); }

 private:
  std::array<Integer, 3> coeffs_;
};

/// The unique common point of two distinct lines (cross product of coefficient vectors).
inline ProjPoint intersect(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw PreconditionError("cannot intersect a line with itself: " + l1.str());
  const auto& a = l1.coeffs();
  const auto& b = l2.coeffs();
  return ProjPoint(Rational(a[1] * b[2] - a[2] * b[1]), Rational(a[2] * b[0] - a[0] * b[2]),
                   Rational(a[0] * b[1] - a[1] * b[0]));
}

class LineArrangement {
 public:
  explicit LineArrangement(std::vector<ProjLine> lines) : lines_(std::move(lines)) {
    if (lines_.size() < 2) throw PreconditionError("a line arrangement needs at least 2 lines");
    std::map<ProjLine, std::size_t> seen;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      const auto [it, inserted] = seen.emplace(lines_[i], i);
      if (!inserted) {
        throw PreconditionError("duplicate line " + lines_[i].str() + " at positions " + std::to_string(it->second) +
                                " and " + std::to_string(i));
      }
    }
  }

  const std::vector<ProjLine>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }

 private:
  std::vector<ProjLine> lines_;
};

/// Singular points of an arrangement with the (sorted) indices of the lines through each.
class SingularLocus {
 public:
  using Incidences = std::map<ProjPoint, std::vector<std::size_t>>;

  SingularLocus(Incidences incidences, std::size_t line_count)
      : incidences_(std::move(incidences)), line_count_(line_count) {}

  const Incidences& incidences() const { return incidences_; }
  std::size_t size() const { return incidences_.size(); }
  std::size_t line_count() const { return line_count_; }

  std::int64_t multiplicity(const ProjPoint& p) const {
    const auto it = incidences_.find(p);
    return it == incidences_.end() ? 0 : static_cast<std::int64_t>(it->second.size());
  }

  /// k_P of every point on line i, in point order.
  CurveIncidenceProfile profile(std::size_t line) const {
    CurveIncidenceProfile out{1, {}};
    for (const auto& [point, through] : incidences_) {
      if (std::binary_search(through.begin(), through.end(), line)) {
        out.multiplicities.push_back(static_cast<std::int64_t>(through.size()));
      }
    }
    return out;
  }

 private:
  Incidences incidences_;
  std::size_t line_count_;
};

/// Groups all pairwise intersections by exact point. Checks sum C(k_P, 2) = C(tau, 2).
inline SingularLocus singular_locus(const LineArrangement& arr) {
  const auto& lines = arr.lines();
  SingularLocus::Incidences groups;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto& through = groups[intersect(lines[i], lines[j])];
      through.push_back(i);
      through.push_back(j);
    }
  }
  Integer pairs = 0;
  for (auto& [point, through] : groups) {
    std::sort(through.begin(), through.end());
    through.erase(std::unique(through.begin(), through.end()), through.end());
    pairs += choose2(Integer(through.size()));
  }
  if (pairs != choose2(Integer(lines.size()))) {
    throw ConsistencyError("pair count mismatch in singular locus: " + to_string(pairs));
  }
  return SingularLocus(std::move(groups), lines.size());
}

inline ArrangementCombinatorics combinatorics_from_locus(const SingularLocus& locus) {
  ArrangementCombinatorics::Counts t;
  for (const auto& [point, through] : locus.incidences()) t[static_cast<std::int64_t>(through.size())] += 1;
  ArrangementCombinatorics comb(std::vector<Integer>(locus.line_count(), Integer(1)), std::move(t));
  if (!check_incidence_identity(comb, PolarizationData::plane_line()).holds) {
    throw ConsistencyError("line arrangement combinatorics violates the incidence identity");
  }
  return comb;
}

inline ArrangementCombinatorics combinatorics_from_lines(const LineArrangement& arr) {
  return combinatorics_from_locus(singular_locus(arr));
}

/// Only double points: t_2 = d^2 C(tau, 2). A combinatorial model of generic members of a
/// base-point-free family; realizability is not checked.
inline ArrangementCombinatorics generic_combinatorics(const Integer& d, std::int64_t tau) {
  if (d < 1) throw PreconditionError("generic combinatorics needs d >= 1");
  if (tau < 2) throw PreconditionError("generic combinatorics needs tau >= 2");
  return ArrangementCombinatorics::uniform(d, tau, {{2, d * d * choose2(Integer(tau))}});
}

/**
 * @brief Reads a line-arrangement file.
 *
 * One line per row as three exact rationals "a b c" (integers or p/q);
 * '#' starts a comment; blank rows are skipped. Malformed rows and
 * duplicate lines raise InputError naming the row.
 */
inline LineArrangement parse_lines(std::istream& in, const std::string& source = "<input>") {
  std::vector<ProjLine> lines;
  std::map<ProjLine, std::size_t> seen;
  std::string row;
  std::size_t row_number = 0;
  while (std::getline(in, row)) {
    ++row_number;
    if (const auto hash = row.find('#'); hash != std::string::npos) row.erase(hash);
    std::istringstream fields(row);
    std::vector<std::string> tokens;
    for (std::string token; fields >> token;) tokens.push_back(token);
    if (tokens.empty()) continue;
    const std::string where = source + ":" + std::to_string(row_number) + ": ";
    if (tokens.size() != 3) {
      throw InputError(where + "expected 3 coefficients, got " + std::to_string(tokens.size()));
    }
    std::optional<ProjLine> line;
    try {
      line.emplace(parse_rational(tokens[0]), parse_rational(tokens[1]), parse_rational(tokens[2]));
    } catch (const Error& e) {
      throw InputError(where + e.what());
    }
    const auto [it, inserted] = seen.emplace(*line, row_number);
    if (!inserted) {
      throw InputError(where + "duplicate line " + line->str() + " (first given on line " +
                       std::to_string(it->second) + ")");
    }
    lines.push_back(std::move(*line));
  }
  if (lines.size() < 2) throw InputError(source + ": need at least 2 lines, got " + std::to_string(lines.size()));
  return LineArrangement(std::move(lines));
}

}  // namespace harbourne
