#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "harbourne/core.hpp"
#include "harbourne/error.hpp"
#include "harbourne/rational.hpp"

// Chern numbers of the abelian covers X branched along an arrangement, all
// returned divided by the degree-dependent normalization (see Normalization).

namespace harbourne {

/// Branching data of the cover: (Z/nZ)^(tau - delta) for general surfaces (n = 2 only),
/// (Z/nZ)^(tau - 1) over the plane.
struct CoverParams {
  std::int64_t n = 2;
  int delta = 0;
  std::int64_t tau = 2;

  /// The double cover used on a general surface with the given combinatorics.
  static CoverParams double_cover(const ArrangementCombinatorics& comb) { return {2, comb.parity_delta(), comb.tau()}; }
};

/// Multiplicities k_P of the singular points lying on one component of degree d.
struct CurveIncidenceProfile {
  Integer degree;
  std::vector<std::int64_t> multiplicities;

  /// sum over P on C of (k_P - 1)
  Integer incidence_sum() const {
    Integer sum = 0;
    for (auto k : multiplicities) sum += k - 1;
    return sum;
  }
};

/// Chern numbers are reported as value / base^exponent.
struct Normalization {
  Integer base;
  std::int64_t exponent = 0;

  Rational factor() const { return rational_pow(base, exponent); }
  Rational unnormalize(const Rational& normalized) const { return normalized * factor(); }
};

inline Normalization general_normalization(const ArrangementCombinatorics& comb) {
  return {2, comb.tau() - comb.parity_delta() - 2};
}

inline Normalization plane_normalization(std::int64_t n, const ArrangementCombinatorics& comb) {
  return {n, comb.tau() - 3};
}

/// e(F_P) of the curve over an exceptional divisor with k_P = k:
/// n^(k-1) (2 - k) + k n^(k-2). For n = 2 this is 2^(k-2) (4 - k).
inline Integer euler_fiber_curve(std::int64_t k, std::int64_t n) {
  if (k < 2 || n < 2) {
    throw PreconditionError("euler_fiber_curve needs k >= 2 and n >= 2, got k = " + std::to_string(k) +
                            ", n = " + std::to_string(n));
  }
  const Integer base(n);
  return ipow(base, static_cast<std::uint64_t>(k - 1)) * (2 - k) + k * ipow(base, static_cast<std::uint64_t>(k - 2));
}

namespace detail {

struct GeneralTerms {
  Integer e_y, k_sq, a_sq, ka, sum_d, two_g_minus_two;
  Integer f0, f1, f2, t2;
};

inline GeneralTerms general_terms(const SurfaceInvariants& surf, const PolarizationData& pol,
                                  const ArrangementCombinatorics& comb, const CoverParams& cover) {
  if (cover.n != 2) {
    throw PreconditionError("general-surface cover formulas are only available for double covers (n = 2), got n = " +
                            std::to_string(cover.n) + "; use the plane formulas for other n");
  }
  if (cover.tau != comb.tau() || cover.delta != comb.parity_delta()) {
    throw PreconditionError("cover parameters do not match the arrangement (tau = " + std::to_string(comb.tau()) +
                            ", delta = " + std::to_string(comb.parity_delta()) + ")");
  }
  if (!comb.degree_parity_ok()) {
    throw PreconditionError("degree parity hypothesis fails: need all d_i even or at least two odd d_i");
  }
  pol.validate();
  require_incidence(comb, pol);
  return {surf.c2,
          surf.c1_sq,
          pol.a_sq,
          pol.ka,
          comb.degree_sum(),
          genus_data(comb, pol).two_g_minus_two,
          f_moment(comb, 0),
          f_moment(comb, 1),
          f_moment(comb, 2),
          comb.t(2)};
}

}  // namespace detail

/// c_2(X) / 2^(tau - delta - 2) = 4 e(Y) + 4g - 4 + f_1 - t_2.
inline Rational cover_c2_general(const SurfaceInvariants& surf, const PolarizationData& pol,
                                 const ArrangementCombinatorics& comb, const CoverParams& cover) {
  const auto v = detail::general_terms(surf, pol, comb, cover);
  return Rational(4 * v.e_y + 2 * v.two_g_minus_two + v.f1 - v.t2);
}

/// K_X^2 / 2^(tau - delta - 2) = -9 f_0 + 6 f_1 - f_2 + t_2 + (sum d)^2 A^2 + 4 (K_Y.A) sum d + 4 K_Y^2.
inline Rational cover_c1sq_general(const SurfaceInvariants& surf, const PolarizationData& pol,
                                   const ArrangementCombinatorics& comb, const CoverParams& cover) {
  const auto v = detail::general_terms(surf, pol, comb, cover);
  return Rational(-9 * v.f0 + 6 * v.f1 - v.f2 + v.t2 + v.sum_d * v.sum_d * v.a_sq + 4 * v.ka * v.sum_d +
                  4 * v.k_sq);
}

/// (3 c_2(X) - c_1^2(X)) / 2^(tau - delta - 2), expanded directly in the arrangement data.
inline Rational miyaoka_gap_general(const SurfaceInvariants& surf, const PolarizationData& pol,
                                    const ArrangementCombinatorics& comb, const CoverParams& cover) {
  const auto v = detail::general_terms(surf, pol, comb, cover);
  const Integer g_minus_one = v.two_g_minus_two / 2;
  return Rational(4 * (3 * v.e_y - v.k_sq) + 12 * g_minus_one + v.f2 - 3 * v.f1 + 9 * v.f0 - 4 * v.t2 -
                  4 * v.ka * v.sum_d - v.sum_d * v.sum_d * v.a_sq);
}

namespace detail {

struct PlaneTerms {
  Integer n, d, tau, g, f0, f1, t2;
};

inline PlaneTerms plane_terms(std::int64_t n, const ArrangementCombinatorics& comb) {
  if (n < 2) throw PreconditionError("branching order n must be >= 2, got " + std::to_string(n));
  const auto d = comb.uniform_degree();
  if (!d) throw PreconditionError("plane cover formulas need all components of the same degree d");
  return {n, *d, comb.tau(), (*d - 1) * (*d - 2) / 2, f_moment(comb, 0), f_moment(comb, 1), comb.t(2)};
}

}  // namespace detail

/// c_2(X) / n^(tau - 3) for the (Z/nZ)^(tau-1) cover of the plane branched along a d-arrangement.
inline Rational cover_c2_p2(std::int64_t n, const ArrangementCombinatorics& comb) {
  const auto v = detail::plane_terms(n, comb);
  return Rational(v.n * v.n * (3 + (2 * v.g - 2) * v.tau + v.f1 - v.f0) + 2 * v.n * ((1 - v.g) * v.tau + v.f0 - v.f1) +
                  (v.f1 - v.t2));
}

/// c_1^2(X) / n^(tau - 3), from the expanded closed form.
inline Rational cover_c1sq_p2(std::int64_t n, const ArrangementCombinatorics& comb) {
  const auto v = detail::plane_terms(n, comb);
  Integer value = 9 * v.n * v.n + v.d * v.d * v.tau * v.tau * (v.n - 1) * (v.n - 1) - 6 * v.d * v.tau * v.n * (v.n - 1);
  for (const auto& [r, count] : comb.counts()) {
    if (r < 3) continue;
    const Integer one_minus_r = 1 - r;
    value -= count * (v.n * v.n + (v.n - 1) * (v.n - 1) * one_minus_r * one_minus_r + 2 * v.n * (v.n - 1) * one_minus_r);
  }
  return Rational(value);
}

/**
 * @brief K^2 on the partial blow-up Z, straight from the divisor
 * K = pi^*K_P2 + ((n-1)/n) pi^*D + sum_P (1 + ((n-1)/n)(1 - k_P)) E_P,
 * using H^2 = 1, E_P^2 = -1 and H.E_P = 0.
 *
 * c_1^2(X) = n^(tau-1) K^2, so n^2 K^2 must agree with cover_c1sq_p2().
 */
inline Rational canonical_square_p2(std::int64_t n, const ArrangementCombinatorics& comb) {
  const auto v = detail::plane_terms(n, comb);
  const Rational ratio(v.n - 1, v.n);
  const Rational h_coeff = Rational(-3) + ratio * v.d * v.tau;
  Rational square = h_coeff * h_coeff;
  for (const auto& [r, count] : comb.counts()) {
    if (r < 3) continue;
    const Rational e_coeff = Rational(1) + ratio * (1 - r);
    square -= e_coeff * e_coeff * count;
  }
  return square;
}

/// 3 c_2(X) - c_1^2(X), normalized by n^(tau - 3).
inline Rational miyaoka_gap_p2(std::int64_t n, const ArrangementCombinatorics& comb) {
  return 3 * cover_c2_p2(n, comb) - cover_c1sq_p2(n, comb);
}

/// K.E_P = -(2n-1)/n + ((n-1)/n) k_P.
inline Rational canonical_dot_exceptional(std::int64_t n, std::int64_t k) {
  return Rational(-(2 * n - 1), n) + Rational(n - 1, n) * k;
}

/// ((2n-2)/n) d^2 - 3d + (n-1)/n, the lower bound on K.C~ valid when t_tau = 0.
inline Rational nef_generic_lower_bound(std::int64_t n, const Integer& d) {
  return Rational(2 * n - 2, n) * d * d - 3 * d + Rational(n - 1, n);
}

struct ExceptionalCheck {
  std::int64_t multiplicity = 0;
  Rational value;        ///< K.E_P
  Rational lower_bound;  ///< (n-2)/n
  bool nonneg = false;
};

struct CurveCheck {
  std::size_t index = 0;
  Rational value;  ///< K.C~
  bool nonneg = false;
};

struct NefReport {
  std::vector<ExceptionalCheck> exceptional;
  std::vector<CurveCheck> curves;
  Rational generic_lower_bound;
  Rational canonical_square;  ///< K^2
  bool nef = false;
  bool big = false;
  /// No per-curve profiles were given: the nef verdict rests on the generic lower bound.
  bool sufficient_condition_only = true;
  std::vector<std::string> violations;
};

/**
 * @brief Checks that the canonical Q-divisor K of the plane cover is nef and big.
 *
 * Every exceptional divisor E_P (k_P >= 3) is tested directly. Curves are
 * tested through their incidence profiles when given; otherwise only the
 * closed-form lower bound is evaluated and the verdict is a sufficient
 * condition. Hypothesis violations (d < 3, n < 2, tau < 4, t_tau != 0) are
 * collected in NefReport::violations and force nef = false. A profile whose
 * incidence sum is not d^2 (tau - 1) raises PreconditionError.
 */
inline NefReport nef_certificate(std::int64_t n, const ArrangementCombinatorics& comb,
                                 std::span<const CurveIncidenceProfile> profiles = {}) {
  const auto v = detail::plane_terms(n, comb);
  NefReport report;
  if (v.d < 3) report.violations.push_back("requires d >= 3, got d = " + to_string(v.d));
  if (comb.tau() < 4) report.violations.push_back("requires tau >= 4, got tau = " + std::to_string(comb.tau()));
  if (comb.t(comb.tau()) != 0) report.violations.push_back("requires t_tau = 0 (no point on every component)");

  bool all_nonneg = true;
  for (const auto& [r, count] : comb.counts()) {
    if (r < 3) continue;
    ExceptionalCheck check{r, canonical_dot_exceptional(n, r), Rational(n - 2, n), false};
    check.nonneg = check.value >= 0;
    all_nonneg = all_nonneg && check.nonneg;
    report.exceptional.push_back(std::move(check));
  }

  report.generic_lower_bound = nef_generic_lower_bound(n, v.d);
  const Rational ratio(n - 1, n);
  const Integer expected_incidences = v.d * v.d * (v.tau - 1);
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& profile = profiles[i];
    if (profile.degree != v.d) {
      report.violations.push_back("profile " + std::to_string(i) + " has degree " + to_string(profile.degree) +
                                  ", arrangement degree is " + to_string(v.d));
    }
    if (profile.incidence_sum() != expected_incidences) {
      throw PreconditionError("profile " + std::to_string(i) + ": sum (k_P - 1) = " + to_string(profile.incidence_sum()) +
                              " but d^2 (tau - 1) = " + to_string(expected_incidences));
    }
    Rational direct = ratio * v.tau * v.d * v.d - 3 * v.d;
    Integer doubles = 0;
    Integer essential = 0;
    for (auto k : profile.multiplicities) {
      if (k == 2) ++doubles;
      if (k >= 3) {
        ++essential;
        direct += Rational(1) + ratio * (1 - k);
      }
    }
    const Rational reduced = ratio * v.d * v.d + ratio * doubles + essential - 3 * v.d;
    if (direct != reduced) throw ConsistencyError("K.C~ routes disagree for profile " + std::to_string(i));
    CurveCheck check{i, direct, direct >= 0};
    all_nonneg = all_nonneg && check.nonneg;
    report.curves.push_back(std::move(check));
  }

  report.sufficient_condition_only = profiles.empty();
  const bool curves_ok = profiles.empty() ? report.generic_lower_bound > 0 : true;
  report.canonical_square = canonical_square_p2(n, comb);
  report.nef = report.violations.empty() && all_nonneg && curves_ok;
  report.big = report.nef && report.canonical_square > 0;
  return report;
}

}  // namespace harbourne
