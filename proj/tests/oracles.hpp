#pragma once

// Reference computations used only by the tests. They work from the raw
// definitions (per-point lists, literal enumeration, a knapsack table) and
// share nothing with the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "harbourne/core.hpp"

namespace oracle {

using harbourne::ArrangementCombinatorics;
using harbourne::Integer;
using harbourne::PolarizationData;
using harbourne::Rational;
using harbourne::SurfaceInvariants;

/// One entry per singular point, holding its multiplicity.
inline std::vector<Integer> point_list(const ArrangementCombinatorics& comb) {
  std::vector<Integer> points;
  for (const auto& [r, count] : comb.counts()) {
    for (Integer i = 0; i < count; ++i) points.push_back(Integer(r));
  }
  return points;
}

/// h = (D^2 - sum_P k_P^2) / s, with D^2 = A^2 (sum d_i)^2 and s the number of points.
inline Rational h_by_definition(const ArrangementCombinatorics& comb, const Integer& a_sq) {
  Integer degree_sum = 0;
  for (const auto& d : comb.degrees()) degree_sum += d;
  Integer squares = 0;
  const auto points = point_list(comb);
  for (const auto& k : points) squares += k * k;
  return Rational(a_sq * degree_sum * degree_sum - squares, Integer(points.size()));
}

/// Pairs of intersection points counted with multiplicity: sum over i < j of A^2 d_i d_j.
inline Integer pair_incidences(const std::vector<Integer>& degrees, const Integer& a_sq) {
  Integer total = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (std::size_t j = i + 1; j < degrees.size(); ++j) total += a_sq * degrees[i] * degrees[j];
  }
  return total;
}

/// Spreads `total` pair incidences over multiplicities 2..max_r at random; the remainder goes to t_2.
inline ArrangementCombinatorics::Counts random_split(std::mt19937_64& rng, std::int64_t total, std::int64_t max_r) {
  ArrangementCombinatorics::Counts t;
  std::int64_t left = total;
  std::uniform_int_distribution<int> rounds(0, 4);
  const int picks = rounds(rng);
  for (int i = 0; i < picks && max_r >= 3; ++i) {
    std::uniform_int_distribution<std::int64_t> pick_r(3, max_r);
    const std::int64_t r = pick_r(rng);
    const std::int64_t weight = r * (r - 1) / 2;
    if (left < weight) continue;
    std::uniform_int_distribution<std::int64_t> pick_count(0, left / weight);
    const std::int64_t count = pick_count(rng);
    t[r] += count;
    left -= count * weight;
  }
  if (left > 0) t[2] += left;
  return t;
}

struct SurfaceInstance {
  SurfaceInvariants surface;
  PolarizationData polarization;
  ArrangementCombinatorics combinatorics;
};

/// A random (surface, polarization, combinatorics) triple satisfying the incidence identity,
/// the degree-parity rule and integral adjunction, with at least one singular point.
inline SurfaceInstance random_surface_instance(std::mt19937_64& rng, bool kodaira_nonneg) {
  std::uniform_int_distribution<int> small(-6, 30);
  std::uniform_int_distribution<int> a_sq_dist(1, 6);
  std::uniform_int_distribution<int> ka_dist(-4, 6);
  std::uniform_int_distribution<int> tau_dist(2, 7);
  std::uniform_int_distribution<int> degree_dist(1, 4);
  SurfaceInvariants surf{Integer(small(rng)), Integer(small(rng) + 6), kodaira_nonneg};
  const int a_sq = a_sq_dist(rng);
  int ka = ka_dist(rng);
  if ((ka - a_sq) % 2 != 0) ++ka;  // K.A = A^2 mod 2 keeps every genus integral
  const int tau = tau_dist(rng);
  std::vector<Integer> degrees;
  for (int i = 0; i < tau; ++i) degrees.push_back(Integer(degree_dist(rng)));
  const auto odd = std::count_if(degrees.begin(), degrees.end(), [](const Integer& d) { return d % 2 != 0; });
  if (odd == 1) degrees.front() += 1;
  const Integer pairs = pair_incidences(degrees, Integer(a_sq));
  auto t = random_split(rng, static_cast<std::int64_t>(pairs), tau);
  return {surf, PolarizationData{Integer(a_sq), Integer(ka)}, ArrangementCombinatorics(degrees, std::move(t))};
}

/// A random vector with d^2 C(tau, 2) = sum C(r, 2) t_r and t_tau = 0.
inline ArrangementCombinatorics random_plane_vector(std::mt19937_64& rng, std::int64_t d, std::int64_t tau) {
  const std::int64_t total = d * d * tau * (tau - 1) / 2;
  return ArrangementCombinatorics::uniform(Integer(d), tau, random_split(rng, total, tau - 1));
}

struct Flags {
  bool hirzebruch = false;
  bool point_count = false;
};

/// Cap on t_r: [lo, hi].
struct Cap {
  std::int64_t lo = 0;
  std::int64_t hi = -1;  ///< -1: unbounded
};

/// Admissibility straight from the stated constraints.
inline bool admissible(const std::map<std::int64_t, std::int64_t>& t, std::int64_t d, std::int64_t tau, Flags flags) {
  std::int64_t incidences = 0, s = 0, lhs2 = 0;
  for (const auto& [r, count] : t) {
    incidences += r * (r - 1) / 2 * count;
    s += count;
    lhs2 += (r - 4) * count;
  }
  if (incidences != d * d * tau * (tau - 1) / 2) return false;
  if (t.count(tau) && t.at(tau) != 0) return false;
  const std::int64_t t2 = t.count(2) ? t.at(2) : 0;
  // (7/2) d^2 tau - (9/2) d tau - t_2 >= sum (r - 4) t_r, doubled.
  if (flags.hirzebruch && 7 * d * d * tau - 9 * d * tau - 2 * t2 < 2 * lhs2) return false;
  if (flags.point_count && s < tau) return false;
  return true;
}

inline Rational plane_h(const std::map<std::int64_t, std::int64_t>& t, std::int64_t d, std::int64_t tau) {
  std::int64_t f0 = 0, f1 = 0;
  for (const auto& [r, count] : t) {
    f0 += count;
    f1 += r * count;
  }
  return Rational(Integer(d * d * tau - f1), Integer(f0));
}

/**
 * Every admissible vector, listed in lexicographic order of (t_{tau-1}, ..., t_2).
 * Plain nested loops; the caller keeps problems small.
 */
inline std::vector<std::map<std::int64_t, std::int64_t>> literal_enumeration(std::int64_t d, std::int64_t tau,
                                                                             Flags flags,
                                                                             const std::map<std::int64_t, Cap>& caps = {}) {
  const std::int64_t total = d * d * tau * (tau - 1) / 2;
  std::vector<std::map<std::int64_t, std::int64_t>> out;
  std::map<std::int64_t, std::int64_t> t;
  auto within = [&](std::int64_t r, std::int64_t v) {
    const auto it = caps.find(r);
    if (it == caps.end()) return true;
    return v >= it->second.lo && (it->second.hi < 0 || v <= it->second.hi);
  };
  auto rec = [&](auto&& self, std::int64_t r, std::int64_t used) -> void {
    if (r == 2) {
      const std::int64_t t2 = total - used;
      if (!within(2, t2)) return;
      auto full = t;
      full[2] = t2;
      std::erase_if(full, [](const auto& kv) { return kv.second == 0; });
      if (admissible(full, d, tau, flags)) out.push_back(full);
      return;
    }
    const std::int64_t weight = r * (r - 1) / 2;
    for (std::int64_t v = 0; used + v * weight <= total; ++v) {
      if (!within(r, v)) continue;
      t[r] = v;
      self(self, r - 1, used + v * weight);
    }
    t.erase(r);
  };
  rec(rec, tau - 1, 0);
  return out;
}

struct DpAnswer {
  std::optional<Rational> min_h;
  /// Every reachable state's best vector already satisfies the Hirzebruch-type constraint,
  /// so that constraint cannot change the minimum.
  bool hirzebruch_vacuous = true;
};

/**
 * Exact minimum of h by dynamic programming, without caps.
 *
 * State (w, c): w = sum_{r>=3} C(r,2) t_r, c = sum_{r>=3} t_r. The table holds the largest
 * S = sum_{r>=3} r t_r reachable in each state. For fixed (w, c) the value
 * h = (d^2 tau - 2 t_2 - S) / (t_2 + c) with t_2 = N - w falls as S grows, and the point-count
 * constraint depends on (w, c) alone. The Hirzebruch-type constraint is an upper bound on S:
 * when the largest S meets it in every state, all vectors do.
 */
inline DpAnswer dp_minimum(std::int64_t d, std::int64_t tau, Flags flags) {
  const std::int64_t total = d * d * tau * (tau - 1) / 2;
  const std::int64_t max_c = total / 3;
  const std::int64_t width = max_c + 1;
  std::vector<std::int32_t> best(static_cast<std::size_t>((total + 1) * width), -1);
  best[0] = 0;
  for (std::int64_t r = 3; r <= tau - 1; ++r) {
    const std::int64_t weight = r * (r - 1) / 2;
    for (std::int64_t w = weight; w <= total; ++w) {
      for (std::int64_t c = 1; c <= max_c; ++c) {
        const auto prev = best[static_cast<std::size_t>((w - weight) * width + c - 1)];
        if (prev < 0) continue;
        auto& cell = best[static_cast<std::size_t>(w * width + c)];
        cell = std::max<std::int32_t>(cell, prev + static_cast<std::int32_t>(r));
      }
    }
  }
  DpAnswer answer;
  for (std::int64_t w = 0; w <= total; ++w) {
    for (std::int64_t c = 0; c <= max_c; ++c) {
      const std::int64_t s_max = best[static_cast<std::size_t>(w * width + c)];
      if (s_max < 0) continue;
      const std::int64_t t2 = total - w;
      if (flags.point_count && t2 + c < tau) continue;
      if (7 * d * d * tau - 9 * d * tau - 2 * t2 < 2 * (s_max - 4 * c - 2 * t2)) answer.hirzebruch_vacuous = false;
      const Rational h(Integer(d * d * tau - 2 * t2 - s_max), Integer(t2 + c));
      if (!answer.min_h || h < *answer.min_h) answer.min_h = h;
    }
  }
  return answer;
}

}  // namespace oracle
