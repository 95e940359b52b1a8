// One PASS/FAIL line per acceptance criterion, with its runtime against the limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"
#include "harbourne/harbourne.hpp"
#include "../tests/oracles.hpp"

using namespace harbourne;

namespace {

const SurfaceInvariants kP2 = SurfaceInvariants::projective_plane();
const PolarizationData kLine = PolarizationData::plane_line();

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<std::string()> check;  ///< empty string on success, otherwise the first failure
};

ArrangementCombinatorics from_map(std::int64_t d, std::int64_t tau, const std::map<std::int64_t, std::int64_t>& t) {
  ArrangementCombinatorics::Counts counts;
  for (const auto& [r, v] : t) counts[r] = v;
  return ArrangementCombinatorics::uniform(Integer(d), tau, std::move(counts));
}

std::string c1_catalog_value() {
  const auto out = cli::cmd_hconst(cli::load_document("", "wiman45"));
  const std::string h = out.output["result"]["h"].get<std::string>();
  if (h != "-225/67") return "h = " + h;
  if (harbourne_constant(catalog("wiman45").combinatorics, kLine) != Rational(-225, 67)) return "library value differs";
  return "";
}

std::string c2_degree_values() {
  const std::vector<std::pair<int, Rational>> expected{{3, Rational(-13)}, {4, Rational(-26)}, {5, Rational(-44)}};
  for (const auto& [d, value] : expected) {
    const Rational got = degree_harbourne_lower_bound(d);
    // (9/2) d - (5/2) d^2 - 4 straight from the expression.
    const Rational direct = Rational(9, 2) * d - Rational(5, 2) * d * d - 4;
    if (got != value || direct != value) return "d = " + std::to_string(d) + ": " + to_string(got);
  }
  return "";
}

std::string c3_closed_forms() {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto inst = oracle::random_surface_instance(rng, i % 2 == 0);
    const auto& comb = inst.combinatorics;
    const auto& pol = inst.polarization;
    if (!check_incidence_identity(comb, pol).holds) return "generator broke the incidence identity";
    const Rational h = harbourne_constant(comb, pol);
    if (h != oracle::h_by_definition(comb, pol.a_sq)) return "h mismatch at instance " + std::to_string(i);
    if (Rational(strict_transform_self_intersection(comb, pol)) != f_moment(comb, 0) * h) {
      return "strict transform mismatch at instance " + std::to_string(i);
    }
  }
  return "";
}

std::string c4_chern_identities() {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto inst = oracle::random_surface_instance(rng, i % 2 == 0);
    const auto cover = CoverParams::double_cover(inst.combinatorics);
    const auto c2 = cover_c2_general(inst.surface, inst.polarization, inst.combinatorics, cover);
    const auto c1sq = cover_c1sq_general(inst.surface, inst.polarization, inst.combinatorics, cover);
    if (miyaoka_gap_general(inst.surface, inst.polarization, inst.combinatorics, cover) != 3 * c2 - c1sq) {
      return "gap identity fails at instance " + std::to_string(i);
    }
  }
  std::mt19937_64 plane_rng(4);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t d = 1 + i % 6, tau = 3 + i % 8;
    const auto comb = oracle::random_plane_vector(plane_rng, d, tau);
    const auto cover = CoverParams::double_cover(comb);
    if (cover_c2_general(kP2, kLine, comb, cover) != cover_c2_p2(2, comb) ||
        cover_c1sq_general(kP2, kLine, comb, cover) != cover_c1sq_p2(2, comb)) {
      return "normalizations disagree at n = 2 for d = " + std::to_string(d) + ", tau = " + std::to_string(tau);
    }
  }
  return "";
}

std::string c5_implications() {
  auto check = [](const ArrangementCombinatorics& comb, std::int64_t d) -> std::string {
    if (!hirzebruch_plane_inequality(comb).holds) return "";
    if (!plane_h_bound(comb).holds) return "h-bound fails";
    if (f_moment(comb, 0) >= comb.tau() && harbourne_constant(comb, kLine) < degree_harbourne_lower_bound(d)) {
      return "degree bound fails";
    }
    return "";
  };
  const auto all = oracle::literal_enumeration(3, 4, {true, false});
  if (all.size() != 19) return "expected 19 vectors at (3,4), found " + std::to_string(all.size());
  for (const auto& t : all) {
    if (auto e = check(from_map(3, 4, t), 3); !e.empty()) return "(3,4): " + e;
  }
  std::mt19937_64 rng(5);
  for (const auto& [d, tau] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 5}, {4, 4}, {5, 4}}) {
    int tested = 0;
    for (int i = 0; i < 20000 && tested < 2000; ++i) {
      const auto comb = oracle::random_plane_vector(rng, d, tau);
      if (!hirzebruch_plane_inequality(comb).holds) continue;
      ++tested;
      if (auto e = check(comb, d); !e.empty()) return "(" + std::to_string(d) + "," + std::to_string(tau) + "): " + e;
    }
    if (tested == 0) return "no admissible samples";
  }
  return "";
}

std::string c6_search_oracle() {
  if (*minimize_h(SearchProblem{3, 4, false, false, {}}).best_h != Rational(-4, 3)) return "(3,4) is not -4/3";
  int problems = 0;
  for (std::int64_t d = 3; d <= 18; ++d) {
    for (std::int64_t tau = 4; d * d * tau * (tau - 1) / 2 <= 2000; ++tau) {
      for (int mask = 0; mask < 4; ++mask) {
        const oracle::Flags flags{(mask & 1) != 0, (mask & 2) != 0};
        const auto dp = oracle::dp_minimum(d, tau, flags);
        const std::string where = "(d, tau, mask) = (" + std::to_string(d) + ", " + std::to_string(tau) + ", " +
                                  std::to_string(mask) + ")";
        if (!dp.hirzebruch_vacuous) return where + ": oracle cannot decide the Hirzebruch constraint";
        const auto result = minimize_h(SearchProblem{Integer(d), tau, flags.hirzebruch, flags.point_count, {}});
        if (result.best_h != dp.min_h) return where + ": search and oracle differ";
        ++problems;
      }
    }
  }
  return problems > 0 ? "" : "no problems checked";
}

std::string c7_geometry() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3), size(2, 10);
  for (int i = 0; i < 100; ++i) {
    std::vector<ProjLine> lines;
    const int tau = size(rng);
    while (static_cast<int>(lines.size()) < tau) {
      const int a = coeff(rng), b = coeff(rng), c = coeff(rng);
      if (a == 0 && b == 0 && c == 0) continue;
      const ProjLine line(a, b, c);
      if (std::find(lines.begin(), lines.end(), line) == lines.end()) lines.push_back(line);
    }
    const auto locus = singular_locus(LineArrangement(lines));
    Integer pairs = 0;
    for (const auto& [p, through] : locus.incidences()) pairs += choose2(Integer(through.size()));
    if (pairs != choose2(Integer(tau))) return "pair count mismatch in arrangement " + std::to_string(i);
    if (!check_incidence_identity(combinatorics_from_locus(locus), kLine).holds) {
      return "incidence identity fails in arrangement " + std::to_string(i);
    }
  }
  const LineArrangement near_pencil({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}});
  const Rational h = harbourne_constant(combinatorics_from_lines(near_pencil), kLine);
  return h == Rational(-5, 4) ? "" : "near-pencil h = " + to_string(h);
}

std::string c8_nef() {
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (std::int64_t k = 3; k <= 64; ++k) {
      if (canonical_dot_exceptional(n, k) < Rational(n - 2, n)) {
        return "K.E below (n-2)/n at n = " + std::to_string(n) + ", k = " + std::to_string(k);
      }
    }
    for (std::int64_t d = 3; d <= 64; ++d) {
      if (nef_generic_lower_bound(n, d) <= 0) return "generic bound not positive at n = " + std::to_string(n);
    }
  }
  if (nef_generic_lower_bound(3, 3) != Rational(11, 3)) return "n = 3, d = 3 value";
  if (nef_generic_lower_bound(2, 3) != Rational(1, 2)) return "n = 2, d = 3 value";
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "catalog value wiman45 h = -225/67", 1.0, c1_catalog_value},
      {2, "degree lower bounds -13, -26, -44", 1.0, c2_degree_values},
      {3, "two h formulas and D~^2 = f0 h on 1000 instances", 5.0, c3_closed_forms},
      {4, "Chern gap identity and n = 2 normalization cross-check", 5.0, c4_chern_identities},
      {5, "Hirzebruch constraint implies the h and degree bounds", 10.0, c5_implications},
      {6, "search equals oracle for d^2 C(tau,2) <= 2000", 60.0, c6_search_oracle},
      {7, "geometry clustering on 100 random arrangements, near-pencil -5/4", 10.0, c7_geometry},
      {8, "nef certificates for k <= 64, n <= 8, d <= 64", 1.0, c8_nef},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds > c.limit_seconds) problem = "too slow";
    const bool pass = problem.empty();
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << "  (" << seconds << " s, limit "
              << c.limit_seconds << " s)" << (pass ? "" : "  " + problem) << '\n';
  }
  return failures == 0 ? 0 : 1;
}
