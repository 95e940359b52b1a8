#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "harbourne/core.hpp"
#include "harbourne/error.hpp"
#include "harbourne/rational.hpp"

namespace harbourne {

/// strict: unmet hypotheses raise HypothesisError. formal: the formula is
/// evaluated anyway and the report lists what was not met.
enum class Evaluation { strict, formal };

/// lhs >= rhs with exact slack = lhs - rhs.
struct BoundReport {
  std::string name;
  std::string statement;
  Rational lhs;
  Rational rhs;
  Rational slack;
  bool holds = false;
  bool hypotheses_met = true;
  std::vector<std::string> unmet_hypotheses;
  std::vector<std::string> notes;
};

namespace detail {

class BoundBuilder {
 public:
  BoundBuilder(std::string name, std::string statement, Evaluation mode)
      : name_(std::move(name)), statement_(std::move(statement)), mode_(mode) {}

  void require(bool ok, std::string hypothesis) {
    if (!ok) unmet_.push_back(std::move(hypothesis));
  }

  /// Throws in strict mode if a hypothesis failed. Call before evaluating.
  void gate() const {
    if (mode_ == Evaluation::strict && !unmet_.empty()) {
      std::string message = name_ + ": hypotheses not met:";
      for (const auto& h : unmet_) message += " [" + h + "]";
      throw HypothesisError(message);
    }
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  BoundReport finish(Rational lhs, Rational rhs) {
    BoundReport report;
    report.name = name_;
    report.statement = statement_;
    report.slack = lhs - rhs;
    report.holds = report.slack >= 0;
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    report.hypotheses_met = unmet_.empty();
    report.unmet_hypotheses = unmet_;
    report.notes = notes_;
    return report;
  }

 private:
  std::string name_;
  std::string statement_;
  Evaluation mode_;
  std::vector<std::string> unmet_;
  std::vector<std::string> notes_;
};

inline bool genus_integral(const ArrangementCombinatorics& comb, const PolarizationData& pol) {
  for (const auto& d : comb.degrees()) {
    if ((pol.a_sq * d * d + pol.ka * d) % 2 != 0) return false;
  }
  return true;
}

inline void require_surface_hypotheses(BoundBuilder& b, const SurfaceInvariants& surf, const PolarizationData& pol,
                                       const ArrangementCombinatorics& comb) {
  b.require(surf.kodaira_nonneg, "Kodaira dimension of Y is non-negative");
  b.require(pol.a_sq >= 0, "A^2 >= 0 (A semi-ample)");
  b.require(comb.degree_parity_ok(), "all d_i even or at least two odd d_i");
  b.require(genus_integral(comb, pol), "A^2 d_i^2 + (K.A) d_i even for every component");
  b.require(check_incidence_identity(comb, pol).holds, "incidence identity A^2((sum d)^2 - sum d^2) = f_2 - f_1");
}

inline Integer require_singular_points(const ArrangementCombinatorics& comb, std::string_view name) {
  Integer f0 = f_moment(comb, 0);
  if (f0 == 0) throw PreconditionError(std::string(name) + ": needs s > 0 singular points");
  return f0;
}

/// D^2 - f_2 through A^2 (sum d)^2; matches the core value whenever the identity holds.
inline Integer raw_strict_transform(const ArrangementCombinatorics& comb, const PolarizationData& pol) {
  const Integer sum = comb.degree_sum();
  return pol.a_sq * sum * sum - f_moment(comb, 2);
}

struct PlaneData {
  Integer d;
  Integer tau;
};

inline PlaneData require_plane_hypotheses(BoundBuilder& b, const ArrangementCombinatorics& comb, std::string_view name) {
  const auto d = comb.uniform_degree();
  if (!d) throw PreconditionError(std::string(name) + ": needs all components of the same degree d");
  b.require(*d >= 3, "requires d >= 3");
  b.require(comb.tau() >= 4, "requires tau >= 4");
  b.require(comb.t(comb.tau()) == 0, "requires t_tau = 0 (no point common to all components)");
  b.require(check_incidence_identity(comb, PolarizationData::plane_line()).holds,
            "incidence identity d^2 C(tau,2) = sum C(r,2) t_r");
  return {*d, comb.tau()};
}

}  // namespace detail

/// D~^2 >= -(9/2) s - ((3/2) A^2 sum d^2 + (K.A) sum d + 2 (3 c_2 - c_1^2)) on surfaces with kappa >= 0.
inline BoundReport strict_transform_bound(const SurfaceInvariants& surf, const PolarizationData& pol,
                                          const ArrangementCombinatorics& comb,
                                          Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("strict-transform",
                         "D~^2 >= -(9/2)s - ((3/2)A^2 sum d^2 + (K.A) sum d + 2(3c2 - c1^2))", mode);
  const Integer f0 = detail::require_singular_points(comb, "strict-transform");
  detail::require_surface_hypotheses(b, surf, pol, comb);
  b.gate();
  const Rational rhs = Rational(-9, 2) * f0 -
                       (Rational(3, 2) * pol.a_sq * comb.degree_square_sum() + pol.ka * comb.degree_sum() +
                        2 * surf.chern_gap());
  return b.finish(Rational(detail::raw_strict_transform(comb, pol)), rhs);
}

/// h >= -9/2 + (2 t_2 + (9/8) t_3 + (1/2) t_4 - (3/2) A^2 sum d^2 - (K.A) sum d - 2 (3 c_2 - c_1^2)) / s.
inline BoundReport kodaira_h_bound(const SurfaceInvariants& surf, const PolarizationData& pol,
                                   const ArrangementCombinatorics& comb, Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("h-refined",
                         "h >= -9/2 + (2t2 + 9/8 t3 + 1/2 t4 - 3/2 A^2 sum d^2 - (K.A) sum d - 2(3c2 - c1^2))/s",
                         mode);
  const Integer f0 = detail::require_singular_points(comb, "h-refined");
  detail::require_surface_hypotheses(b, surf, pol, comb);
  b.gate();
  const Rational inner = 2 * comb.t(2) + Rational(9, 8) * comb.t(3) + Rational(1, 2) * comb.t(4) -
                         Rational(3, 2) * pol.a_sq * comb.degree_square_sum() - pol.ka * comb.degree_sum() -
                         2 * surf.chern_gap();
  const Rational rhs = Rational(-9, 2) + inner / f0;
  return b.finish(Rational(detail::raw_strict_transform(comb, pol), f0), rhs);
}

/// h >= -4 + (t_2 + (1/4) t_3 - 4 A^2 sum d^2 - 2 (K.A) sum d - (3 c_2 - c_1^2)) / s.
inline BoundReport kodaira_h_bound_simplified(const SurfaceInvariants& surf, const PolarizationData& pol,
                                              const ArrangementCombinatorics& comb,
                                              Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("h-simplified", "h >= -4 + (t2 + 1/4 t3 - 4A^2 sum d^2 - 2(K.A) sum d - (3c2 - c1^2))/s",
                         mode);
  const Integer f0 = detail::require_singular_points(comb, "h-simplified");
  detail::require_surface_hypotheses(b, surf, pol, comb);
  b.gate();
  const Rational inner = comb.t(2) + Rational(1, 4) * comb.t(3) - 4 * pol.a_sq * comb.degree_square_sum() -
                         2 * pol.ka * comb.degree_sum() - surf.chern_gap();
  const Rational rhs = Rational(-4) + inner / f0;
  return b.finish(Rational(detail::raw_strict_transform(comb, pol), f0), rhs);
}

/// 5 A^2 sum d^2 + 2 (K.A) sum d + 4 (3 c_2 - c_1^2) - 2 f_1 + 9 f_0 >= 4 t_2 + (9/4) t_3 + t_4.
inline BoundReport hirzebruch_surface_inequality(const SurfaceInvariants& surf, const PolarizationData& pol,
                                                 const ArrangementCombinatorics& comb,
                                                 Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("hirzebruch-surface",
                         "5A^2 sum d^2 + 2(K.A) sum d + 4(3c2 - c1^2) - 2f1 + 9f0 >= 4t2 + 9/4 t3 + t4", mode);
  detail::require_surface_hypotheses(b, surf, pol, comb);
  b.gate();
  const Rational lhs(5 * pol.a_sq * comb.degree_square_sum() + 2 * pol.ka * comb.degree_sum() + 4 * surf.chern_gap() -
                     2 * f_moment(comb, 1) + 9 * f_moment(comb, 0));
  const Rational rhs = 4 * comb.t(2) + Rational(9, 4) * comb.t(3) + comb.t(4);
  return b.finish(lhs, rhs);
}

/// (7/2) d^2 tau - (9/2) d tau - t_2 >= sum_r (r - 4) t_r for d-arrangements in the plane.
inline BoundReport hirzebruch_plane_inequality(const ArrangementCombinatorics& comb,
                                               Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("hirzebruch-plane", "(7/2)d^2 tau - (9/2)d tau - t2 >= sum (r-4) t_r", mode);
  const auto [d, tau] = detail::require_plane_hypotheses(b, comb, "hirzebruch-plane");
  b.gate();
  const Rational lhs = Rational(7, 2) * d * d * tau - Rational(9, 2) * d * tau - comb.t(2);
  Integer rhs = 0;
  for (const auto& [r, count] : comb.counts()) rhs += (r - 4) * count;
  return b.finish(lhs, Rational(rhs));
}

/// D~^2 >= 9 d tau / 2 - 5 d^2 tau / 2 - 4 s.
inline BoundReport plane_strict_transform_bound(const ArrangementCombinatorics& comb,
                                                Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("plane-strict-transform", "D~^2 >= (9/2)d tau - (5/2)d^2 tau - 4s", mode);
  const auto [d, tau] = detail::require_plane_hypotheses(b, comb, "plane-strict-transform");
  b.gate();
  b.note("t_tau = 0 stands in for base-point-freeness of the spanned series; the latter is not checked");
  const Integer f0 = f_moment(comb, 0);
  const Rational rhs = Rational(9, 2) * d * tau - Rational(5, 2) * d * d * tau - 4 * f0;
  return b.finish(Rational(detail::raw_strict_transform(comb, PolarizationData::plane_line())), rhs);
}

/// h >= -4 + (-(5/2) d^2 tau + (9/2) d tau) / s; slack is the strict-transform slack divided by s.
inline BoundReport plane_h_bound(const ArrangementCombinatorics& comb, Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("plane-h", "h >= -4 + (-(5/2)d^2 tau + (9/2)d tau)/s", mode);
  const Integer f0 = detail::require_singular_points(comb, "plane-h");
  const auto [d, tau] = detail::require_plane_hypotheses(b, comb, "plane-h");
  b.gate();
  b.note("t_tau = 0 stands in for base-point-freeness of the spanned series; the latter is not checked");
  const Rational rhs = Rational(-4) + (Rational(-5, 2) * d * d * tau + Rational(9, 2) * d * tau) / f0;
  return b.finish(Rational(detail::raw_strict_transform(comb, PolarizationData::plane_line()), f0), rhs);
}

/// (9/2) d - (5/2) d^2 - 4, the lower bound on the degree-d Harbourne constant of the plane.
inline Rational degree_harbourne_lower_bound(const Integer& d) {
  if (d < 3) {
    throw PreconditionError("degree lower bound needs d >= 3, got d = " + to_string(d) +
                            " (use reference_harbourne_values() for d = 1, 2)");
  }
  return Rational(9, 2) * d - Rational(5, 2) * d * d - 4;
}

/// Values for lines and conics quoted from earlier work. Catalog constants, not computed.
struct ReferenceHarbourneValue {
  int degree;
  Rational lower_bound;
  Rational least_known;
};

inline const std::vector<ReferenceHarbourneValue>& reference_harbourne_values() {
  static const std::vector<ReferenceHarbourneValue> values{
      {1, Rational(-4), Rational(-225, 67)},
      {2, Rational(-9, 2), Rational(-225, 68)},
  };
  return values;
}

/// h >= degree_harbourne_lower_bound(d) as a report for one d-arrangement.
inline BoundReport degree_bound_report(const ArrangementCombinatorics& comb, Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("degree-lower-bound", "h >= (9/2)d - (5/2)d^2 - 4", mode);
  const Integer f0 = detail::require_singular_points(comb, "degree-lower-bound");
  const auto [d, tau] = detail::require_plane_hypotheses(b, comb, "degree-lower-bound");
  b.gate();
  const Rational rhs = Rational(9, 2) * d - Rational(5, 2) * d * d - 4;
  return b.finish(Rational(detail::raw_strict_transform(comb, PolarizationData::plane_line()), f0), rhs);
}

/// s >= tau for tau curves of one degree without a common point. Failure means unrealizable.
inline BoundReport singular_point_count_check(const ArrangementCombinatorics& comb,
                                              Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("point-count", "s >= tau", mode);
  b.require(comb.uniform_degree().has_value(), "all components of the same degree");
  b.require(comb.t(comb.tau()) == 0, "requires t_tau = 0 (no point common to all components)");
  b.gate();
  auto report = b.finish(Rational(f_moment(comb, 0)), Rational(comb.tau()));
  if (!report.holds) report.notes.push_back("combinatorics is geometrically unrealizable (fewer points than curves)");
  return report;
}

/// D~^2 >= -4 s, equivalently h >= -4.
inline BoundReport effective_bnc_check(const ArrangementCombinatorics& comb, const PolarizationData& pol,
                                       Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("effective-bnc", "D~^2 >= -4s", mode);
  const Integer f0 = detail::require_singular_points(comb, "effective-bnc");
  b.require(check_incidence_identity(comb, pol).holds, "incidence identity A^2((sum d)^2 - sum d^2) = f_2 - f_1");
  b.gate();
  auto report = b.finish(Rational(detail::raw_strict_transform(comb, pol)), Rational(-4 * f0));
  if (!report.holds) report.notes.push_back("combinatorial candidate below the h = -4 threshold");
  return report;
}

/// 36 (g-1) tau + 36 d tau - 4 d^2 tau + 16 f_0 - 4 f_1 - 4 t_2 >= 0, the Miyaoka-Yau inequality
/// on the (Z/3Z)^(tau-1) cover of the plane. Its slack is 4 times the hirzebruch-plane slack.
inline BoundReport miyaoka_yau_triple_cover(const ArrangementCombinatorics& comb,
                                            Evaluation mode = Evaluation::strict) {
  detail::BoundBuilder b("miyaoka-yau-n3", "36(g-1)tau + 36 d tau - 4 d^2 tau + 16 f0 - 4 f1 - 4 t2 >= 0", mode);
  const auto [d, tau] = detail::require_plane_hypotheses(b, comb, "miyaoka-yau-n3");
  b.gate();
  const Integer g_minus_one = (d - 1) * (d - 2) / 2 - 1;
  const Integer lhs = 36 * g_minus_one * tau + 36 * d * tau - 4 * d * d * tau + 16 * f_moment(comb, 0) -
                      4 * f_moment(comb, 1) - 4 * comb.t(2);
  return b.finish(Rational(lhs), Rational(0));
}

// Registry used by the CLI.

enum class BoundScope { surface, plane };

struct BoundEntry {
  std::string name;
  BoundScope scope;
  std::function<BoundReport(const SurfaceInvariants&, const PolarizationData&, const ArrangementCombinatorics&,
                            Evaluation)>
      evaluate;
};

inline const std::vector<BoundEntry>& bound_registry() {
  using S = const SurfaceInvariants&;
  using P = const PolarizationData&;
  using C = const ArrangementCombinatorics&;
  static const std::vector<BoundEntry> entries{
      {"strict-transform", BoundScope::surface, [](S s, P p, C c, Evaluation m) { return strict_transform_bound(s, p, c, m); }},
      {"h-refined", BoundScope::surface, [](S s, P p, C c, Evaluation m) { return kodaira_h_bound(s, p, c, m); }},
      {"h-simplified", BoundScope::surface,
       [](S s, P p, C c, Evaluation m) { return kodaira_h_bound_simplified(s, p, c, m); }},
      {"hirzebruch-surface", BoundScope::surface,
       [](S s, P p, C c, Evaluation m) { return hirzebruch_surface_inequality(s, p, c, m); }},
      {"hirzebruch-plane", BoundScope::plane, [](S, P, C c, Evaluation m) { return hirzebruch_plane_inequality(c, m); }},
      {"plane-strict-transform", BoundScope::plane,
       [](S, P, C c, Evaluation m) { return plane_strict_transform_bound(c, m); }},
      {"plane-h", BoundScope::plane, [](S, P, C c, Evaluation m) { return plane_h_bound(c, m); }},
      {"degree-lower-bound", BoundScope::plane, [](S, P, C c, Evaluation m) { return degree_bound_report(c, m); }},
      {"point-count", BoundScope::plane, [](S, P, C c, Evaluation m) { return singular_point_count_check(c, m); }},
      {"effective-bnc", BoundScope::surface, [](S, P p, C c, Evaluation m) { return effective_bnc_check(c, p, m); }},
      {"miyaoka-yau-n3", BoundScope::plane, [](S, P, C c, Evaluation m) { return miyaoka_yau_triple_cover(c, m); }},
  };
  return entries;
}

inline const BoundEntry& find_bound(std::string_view name) {
  for (const auto& entry : bound_registry()) {
    if (entry.name == name) return entry;
  }
  throw UnknownEntryError("unknown bound '" + std::string(name) + "'");
}

/**
 * @brief Evaluates one registered bound. Plane-scoped bounds additionally
 * require the surface to be the projective plane with A a line; in strict
 * mode that is a hypothesis failure like any other.
 */
inline BoundReport evaluate_bound(std::string_view name, const SurfaceInvariants& surf, const PolarizationData& pol,
                                  const ArrangementCombinatorics& comb, Evaluation mode = Evaluation::strict) {
  const auto& entry = find_bound(name);
  const bool plane_setting =
      surf == SurfaceInvariants::projective_plane() && pol == PolarizationData::plane_line();
  if (entry.scope == BoundScope::plane && !plane_setting) {
    const std::string hypothesis = "surface is the projective plane and A is a line";
    if (mode == Evaluation::strict) throw HypothesisError(entry.name + ": hypotheses not met: [" + hypothesis + "]");
    auto report = entry.evaluate(surf, pol, comb, mode);
    report.hypotheses_met = false;
    report.unmet_hypotheses.insert(report.unmet_hypotheses.begin(), hypothesis);
    return report;
  }
  return entry.evaluate(surf, pol, comb, mode);
}

}  // namespace harbourne
