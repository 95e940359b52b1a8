#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "harbourne/error.hpp"
#include "harbourne/rational.hpp"

namespace harbourne {

/// Numerical invariants of the ambient surface Y.
struct SurfaceInvariants {
  Integer c1_sq;  ///< K_Y^2
  Integer c2;     ///< topological Euler number e(Y)
  bool kodaira_nonneg = false;

  static SurfaceInvariants projective_plane() { return {9, 3, false}; }

  /// 3 c_2(Y) - c_1^2(Y)
  Integer chern_gap() const { return 3 * c2 - c1_sq; }

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// A^2 and K_Y.A for the divisor A whose multiples carry the arrangement curves.
struct PolarizationData {
  Integer a_sq;
  Integer ka;

  static PolarizationData plane_line() { return {1, -3}; }

  void validate() const {
    if (a_sq < 0) throw PreconditionError("A^2 must be non-negative (A is semi-ample), got " + to_string(a_sq));
  }

  friend bool operator==(const PolarizationData&, const PolarizationData&) = default;
};

/**
 * @brief Combinatorial data of a transversal arrangement: the degrees d_i of
 * the tau components and the number t_r of r-fold points.
 *
 * The counts are stored sparsely and only non-zero entries are kept. The
 * incidence identity is deliberately not enforced here so that tentative
 * vectors can be represented; see check_incidence_identity().
 */
class ArrangementCombinatorics {
 public:
  using Multiplicity = std::int64_t;
  using Counts = std::map<Multiplicity, Integer>;

  ArrangementCombinatorics(std::vector<Integer> degrees, Counts t)
      : degrees_(std::move(degrees)) {
    if (degrees_.size() < 2) {
      throw PreconditionError("an arrangement needs tau >= 2 components, got " +
                              std::to_string(degrees_.size()));
    }
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (degrees_[i] < 1) {
        throw PreconditionError("component degree d_" + std::to_string(i + 1) + " must be >= 1, got " +
                                to_string(degrees_[i]));
      }
    }
    for (auto& [r, count] : t) {
      if (r < 2 || r > tau()) {
        throw PreconditionError("multiplicity r = " + std::to_string(r) + " outside [2, tau = " +
                                std::to_string(tau()) + "]");
      }
      if (count < 0) {
        throw PreconditionError("t_" + std::to_string(r) + " must be non-negative, got " + to_string(count));
      }
      if (count != 0) t_.emplace(r, std::move(count));
    }
  }

  /// tau components all of degree d.
  static ArrangementCombinatorics uniform(const Integer& d, std::int64_t tau, Counts t) {
    if (tau < 2) throw PreconditionError("an arrangement needs tau >= 2 components, got " + std::to_string(tau));
    return ArrangementCombinatorics(std::vector<Integer>(static_cast<std::size_t>(tau), d), std::move(t));
  }

  std::int64_t tau() const { return static_cast<std::int64_t>(degrees_.size()); }
  const std::vector<Integer>& degrees() const { return degrees_; }
  const Counts& counts() const { return t_; }

  Integer t(Multiplicity r) const {
    const auto it = t_.find(r);
    return it == t_.end() ? Integer(0) : it->second;
  }

  std::optional<Integer> uniform_degree() const {
    const Integer& first = degrees_.front();
    const bool same = std::all_of(degrees_.begin(), degrees_.end(), [&](const Integer& d) { return d == first; });
    if (!same) return std::nullopt;
    return first;
  }

  Integer degree_sum() const {
    Integer sum = 0;
    for (const auto& d : degrees_) sum += d;
    return sum;
  }

  Integer degree_square_sum() const {
    Integer sum = 0;
    for (const auto& d : degrees_) sum += d * d;
    return sum;
  }

  /// Either all degrees are even or at least two are odd (needed for the double cover).
  bool degree_parity_ok() const {
    const auto odd = std::count_if(degrees_.begin(), degrees_.end(), [](const Integer& d) { return d % 2 != 0; });
    return odd == 0 || odd >= 2;
  }

  /// 0 if all degrees are even, 1 otherwise.
  int parity_delta() const {
    return std::any_of(degrees_.begin(), degrees_.end(), [](const Integer& d) { return d % 2 != 0; }) ? 1 : 0;
  }

  friend bool operator==(const ArrangementCombinatorics&, const ArrangementCombinatorics&) = default;

 private:
  std::vector<Integer> degrees_;
  Counts t_;
};

/// f_i = sum over r of r^i t_r. f_0 is the number s of singular points.
inline Integer f_moment(const ArrangementCombinatorics& comb, unsigned i) {
  Integer sum = 0;
  for (const auto& [r, count] : comb.counts()) sum += ipow(Integer(r), i) * count;
  return sum;
}

struct IncidenceCheck {
  bool holds = false;
  Integer discrepancy;  ///< A^2((sum d)^2 - sum d^2) - (f_2 - f_1)
};

/// A^2 ((sum d_i)^2 - sum d_i^2) = f_2 - f_1, i.e. pairwise intersections counted at the points.
inline IncidenceCheck check_incidence_identity(const ArrangementCombinatorics& comb, const PolarizationData& pol) {
  const Integer sum = comb.degree_sum();
  const Integer lhs = pol.a_sq * (sum * sum - comb.degree_square_sum());
  const Integer rhs = f_moment(comb, 2) - f_moment(comb, 1);
  return {lhs == rhs, lhs - rhs};
}

namespace detail {

inline void require_incidence(const ArrangementCombinatorics& comb, const PolarizationData& pol) {
  const auto check = check_incidence_identity(comb, pol);
  if (!check.holds) {
    throw PreconditionError("incidence identity fails (discrepancy " + to_string(check.discrepancy) +
                            "): the combinatorics is not realizable");
  }
}

}  // namespace detail

/// D^2 = A^2 sum d_i^2 + f_2 - f_1; equals A^2 (sum d_i)^2 once the identity holds.
inline Integer d_squared(const ArrangementCombinatorics& comb, const PolarizationData& pol) {
  detail::require_incidence(comb, pol);
  const Integer value = pol.a_sq * comb.degree_square_sum() + f_moment(comb, 2) - f_moment(comb, 1);
  const Integer sum = comb.degree_sum();
  if (value != pol.a_sq * sum * sum) throw ConsistencyError("D^2 routes disagree");
  return value;
}

/// D~^2 = D^2 - sum k_P^2 for the strict transform after blowing up Sing(D).
inline Integer strict_transform_self_intersection(const ArrangementCombinatorics& comb,
                                                  const PolarizationData& pol) {
  return d_squared(comb, pol) - f_moment(comb, 2);
}

/**
 * @brief Harbourne constant h = (D^2 - sum k_P^2) / s.
 *
 * Both closed forms (A^2 (sum d)^2 - f_2) / f_0 and (A^2 sum d^2 - f_1) / f_0
 * are evaluated; a mismatch raises ConsistencyError.
 */
inline Rational harbourne_constant(const ArrangementCombinatorics& comb, const PolarizationData& pol) {
  const Integer f0 = f_moment(comb, 0);
  if (f0 == 0) throw PreconditionError("Harbourne constant undefined: the arrangement has no singular points");
  detail::require_incidence(comb, pol);
  const Integer sum = comb.degree_sum();
  const Rational via_f2(pol.a_sq * sum * sum - f_moment(comb, 2), f0);
  const Rational via_f1(pol.a_sq * comb.degree_square_sum() - f_moment(comb, 1), f0);
  if (via_f2 != via_f1) {
    throw ConsistencyError("closed forms of h disagree: " + to_string(via_f2) + " vs " + to_string(via_f1));
  }
  return via_f2;
}

struct GenusData {
  std::vector<Integer> component_genera;
  Integer two_g_minus_two;  ///< 2g - 2 = sum (2 g_i - 2)

  Integer g_minus_one() const { return two_g_minus_two / 2; }
};

/// Adjunction on each component: 2 g_i - 2 = A^2 d_i^2 + (K_Y.A) d_i.
inline GenusData genus_data(const ArrangementCombinatorics& comb, const PolarizationData& pol) {
  GenusData out;
  out.two_g_minus_two = 0;
  out.component_genera.reserve(comb.degrees().size());
  for (std::size_t i = 0; i < comb.degrees().size(); ++i) {
    const Integer& d = comb.degrees()[i];
    const Integer twice = pol.a_sq * d * d + pol.ka * d;
    if (twice % 2 != 0) {
      throw PreconditionError("adjunction gives a non-integral genus for d_" + std::to_string(i + 1) + " = " +
                              to_string(d) + " (A^2 d^2 + K.A d = " + to_string(twice) + " is odd)");
    }
    out.component_genera.push_back(twice / 2 + 1);
    out.two_g_minus_two += twice;
  }
  return out;
}

struct EulerStrata {
  Integer divisor;                 ///< e(D)
  Integer divisor_minus_singular;  ///< e(D \ Sing D)
  Integer complement;              ///< e(Y \ D)
};

inline EulerStrata euler_strata(const ArrangementCombinatorics& comb, const PolarizationData& pol,
                                const SurfaceInvariants& surf) {
  const Integer two_g_minus_two = genus_data(comb, pol).two_g_minus_two;
  const Integer f0 = f_moment(comb, 0);
  const Integer f1 = f_moment(comb, 1);
  EulerStrata out{-two_g_minus_two + f0 - f1, -two_g_minus_two - f1, surf.c2 + two_g_minus_two + f1 - f0};
  if (out.complement + out.divisor != surf.c2) throw ConsistencyError("Euler numbers are not additive");
  return out;
}

}  // namespace harbourne
