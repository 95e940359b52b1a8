#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "harbourne/bounds.hpp"
#include "harbourne/core.hpp"
#include "harbourne/error.hpp"
#include "harbourne/rational.hpp"

// Search over multiplicity vectors (t_2, ..., t_{tau-1}) of d-arrangements in
// the plane. Everything found here is admissible combinatorics, not a
// certified arrangement.

namespace harbourne {

struct CountRange {
  Integer min = 0;
  std::optional<Integer> max;
};

struct SearchProblem {
  Integer d;
  std::int64_t tau = 4;
  /// (7/2) d^2 tau - (9/2) d tau - t_2 >= sum (r - 4) t_r
  bool hirzebruch = false;
  /// s >= tau
  bool point_count = false;
  /// Optional bounds on individual t_r, r in [2, tau - 1].
  std::map<std::int64_t, CountRange> caps;

  void validate() const {
    if (d < 3) throw PreconditionError("search needs d >= 3, got d = " + to_string(d));
    if (tau < 4) throw PreconditionError("search needs tau >= 4, got tau = " + std::to_string(tau));
    for (const auto& [r, range] : caps) {
      if (r < 2 || r >= tau) {
        throw PreconditionError("cap on t_" + std::to_string(r) + " outside [2, tau - 1]; t_tau is always 0");
      }
      if (range.min < 0) throw PreconditionError("cap minimum for t_" + std::to_string(r) + " is negative");
      if (range.max && *range.max < range.min) {
        throw PreconditionError("cap on t_" + std::to_string(r) + " has max < min");
      }
    }
  }

  /// d^2 C(tau, 2), the number of pairwise intersections to distribute.
  Integer incidence_total() const { return d * d * choose2(Integer(tau)); }
};

struct EnumerationSummary {
  std::uint64_t emitted = 0;
  bool complete = true;  ///< false when the budget or the visitor stopped the stream
};

enum class SearchStatus { optimal, budget_exhausted, infeasible };

struct SearchResult {
  SearchStatus status = SearchStatus::infeasible;
  std::optional<ArrangementCombinatorics> best;
  std::optional<Rational> best_h;
  std::uint64_t admissible_visited = 0;
  std::uint64_t nodes = 0;

  bool exhaustive() const { return status != SearchStatus::budget_exhausted; }
};

struct SearchOptions {
  unsigned jobs = 1;
  /// Cap on visited search nodes. A budgeted run is always sequential so the cut is deterministic.
  std::optional<std::uint64_t> node_budget;
};

namespace detail {

template <class Int>
struct WideOf {
  using type = Integer;
};
template <>
struct WideOf<std::int64_t> {
  using type = __int128;
};

/// a/b < c/d for positive denominators.
template <class Wide, class Int>
bool fraction_less(const Int& a, const Int& b, const Int& c, const Int& d) {
  return Wide(a) * Wide(d) < Wide(c) * Wide(b);
}

template <class Int>
Int to_int(const Integer& z) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return z;
  } else {
    return static_cast<Int>(z);
  }
}

/**
 * Depth-first traversal over t_{tau-1}, ..., t_3 (in that order, each
 * ascending), with t_2 fixed by the incidence remainder. Int is either
 * int64_t (when the problem is small enough that no intermediate overflows)
 * or Integer.
 */
template <class Int>
class SearchEngine {
 public:
  using Wide = typename WideOf<Int>::type;

  struct Fraction {
    Int num;
    Int den;
  };

  struct TaskResult {
    std::optional<Fraction> best;
    std::vector<Int> best_vector;  ///< values for multiplicities tau-1, ..., 3, then t_2
    std::uint64_t visited = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
  };

  explicit SearchEngine(const SearchProblem& p) : problem_(p) {
    total_ = to_int<Int>(p.incidence_total());
    base_ = to_int<Int>(p.d * p.d * p.tau);
    eq_constant_ = to_int<Int>(7 * p.d * p.d * p.tau - 9 * p.d * p.tau);
    tau_ = Int(p.tau);
    for (std::int64_t r = p.tau - 1; r >= 3; --r) {
      Var v;
      v.r = Int(r);
      v.weight = Int(r * (r - 1) / 2);
      if (const auto it = p.caps.find(r); it != p.caps.end()) {
        v.lo = to_int<Int>(it->second.min);
        if (it->second.max) v.hi = to_int<Int>(*it->second.max);
      }
      vars_.push_back(v);
    }
    if (const auto it = p.caps.find(2); it != p.caps.end()) {
      t2_lo_ = to_int<Int>(it->second.min);
      if (it->second.max) t2_hi_ = to_int<Int>(*it->second.max);
    }
    const std::size_t n = vars_.size();
    suffix_weight_.assign(n + 1, Int(0));
    suffix_s_.assign(n + 1, Int(0));
    suffix_c_.assign(n + 1, Int(0));
    for (std::size_t i = n; i-- > 0;) {
      suffix_weight_[i] = suffix_weight_[i + 1] + vars_[i].weight * vars_[i].lo;
      suffix_s_[i] = suffix_s_[i + 1] + vars_[i].r * vars_[i].lo;
      suffix_c_[i] = suffix_c_[i + 1] + vars_[i].lo;
    }
  }

  /// Values the top variable t_{tau-1} can take (each is one independent task).
  std::pair<Int, Int> top_range() const {
    const Var& v = vars_.front();
    Int hi = (total_ - suffix_weight_[1] - t2_lo_) / v.weight;
    if (v.hi && *v.hi < hi) hi = *v.hi;
    return {v.lo, hi};
  }

  /// Exhaustive enumeration in lexicographic order; visitor gets (vars values, t_2) and returns false to stop.
  template <class Visitor>
  bool enumerate(Visitor&& visit) {
    std::vector<Int> values(vars_.size(), Int(0));
    return enumerate_rec(0, Int(0), values, visit);
  }

  /// Branch and bound restricted to t_{tau-1} = top. Prunes when the relaxation
  /// exceeds the seed strictly, or reaches the task's own incumbent.
  TaskResult run_task(const Int& top, const std::optional<Fraction>& seed, std::optional<std::uint64_t> budget) const {
    TaskResult result;
    std::vector<Int> values(vars_.size(), Int(0));
    Bnb state{seed, budget, result, values};
    const Var& v = vars_.front();
    values[0] = top;
    const Int w = v.weight * top;
    if (w + suffix_weight_[1] + t2_lo_ <= total_) bnb_rec(1, w, v.r * top, top, state);
    return result;
  }

  /// Feasible vectors obtained by pouring the free incidences into a single multiplicity.
  std::optional<std::pair<Fraction, std::vector<Int>>> seed() const {
    std::optional<std::pair<Fraction, std::vector<Int>>> best;
    for (std::size_t pick = 0; pick <= vars_.size(); ++pick) {
      std::vector<Int> values;
      Int w = 0, s = 0, c = 0;
      for (const auto& v : vars_) {
        values.push_back(v.lo);
        w += v.weight * v.lo;
        s += v.r * v.lo;
        c += v.lo;
      }
      if (w + t2_lo_ > total_) return std::nullopt;
      if (pick < vars_.size()) {
        const Var& v = vars_[pick];
        Int extra = (total_ - w - t2_lo_) / v.weight;
        if (v.hi && v.lo + extra > *v.hi) extra = *v.hi - v.lo;
        values[pick] += extra;
        w += v.weight * extra;
        s += v.r * extra;
        c += extra;
      }
      const Int t2 = total_ - w;
      if (!leaf_admissible(t2, s, c)) continue;
      Fraction h = leaf_value(t2, s, c);
      if (!best || fraction_less<Wide>(h.num, h.den, best->first.num, best->first.den)) {
        values.push_back(t2);
        best.emplace(h, std::move(values));
      }
    }
    return best;
  }

  const SearchProblem& problem() const { return problem_; }

  /// Values listed as (t_{tau-1}, ..., t_3, t_2) into combinatorics.
  ArrangementCombinatorics to_combinatorics(const std::vector<Int>& values, const Int& t2) const {
    ArrangementCombinatorics::Counts t;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (values[i] != 0) t[static_cast<std::int64_t>(vars_[i].r)] = Integer(values[i]);
    }
    if (t2 != 0) t[2] = Integer(t2);
    return ArrangementCombinatorics::uniform(problem_.d, problem_.tau, std::move(t));
  }

  static bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  struct Var {
    Int r = 0;
    Int weight = 0;
    Int lo = 0;
    std::optional<Int> hi;
  };

  struct Bnb {
    const std::optional<Fraction>& seed;
    std::optional<std::uint64_t> budget;
    TaskResult& result;
    std::vector<Int>& values;
  };

  bool leaf_admissible(const Int& t2, const Int& s, const Int& c) const {
    if (t2 < t2_lo_) return false;
    if (t2_hi_ && t2 > *t2_hi_) return false;
    // 2 * [(7/2) d^2 tau - (9/2) d tau - t_2 - sum_{r>=2} (r-4) t_r] >= 0, with the r = 2 term folded in.
    if (problem_.hirzebruch && eq_constant_ + 2 * t2 - 2 * s + 8 * c < 0) return false;
    if (problem_.point_count && t2 + c < tau_) return false;
    return true;
  }

  Fraction leaf_value(const Int& t2, const Int& s, const Int& c) const {
    return {base_ - 2 * t2 - s, t2 + c};
  }

  template <class Visitor>
  bool enumerate_rec(std::size_t idx, const Int& w, std::vector<Int>& values, Visitor& visit) {
    if (idx == vars_.size()) {
      const Int t2 = total_ - w;
      Int s = 0, c = 0;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        s += vars_[i].r * values[i];
        c += values[i];
      }
      if (!leaf_admissible(t2, s, c)) return true;
      return visit(values, t2);
    }
    const Var& v = vars_[idx];
    for (Int t = v.lo;; ++t) {
      if (v.hi && t > *v.hi) break;
      const Int next = w + v.weight * t;
      if (next + suffix_weight_[idx + 1] + t2_lo_ > total_) break;
      values[idx] = t;
      if (!enumerate_rec(idx + 1, next, values, visit)) return false;
    }
    values[idx] = Int(0);
    return true;
  }

  /// Lower bound on h over the subtree: the relaxation keeps the fixed prefix, puts the
  /// remaining variables at their minimum, and spreads the leftover incidences continuously.
  /// Its feasible region is a simplex and h is linear-fractional with a positive
  /// denominator there, so the minimum sits at a vertex.
  Fraction relaxation_bound(std::size_t idx, const Int& w, const Int& s, const Int& c) const {
    const Int t2 = total_ - w - suffix_weight_[idx];
    const Int s_all = s + suffix_s_[idx];
    const Int c_all = c + suffix_c_[idx];
    Fraction best = leaf_value(t2, s_all, c_all);
    const Int free = t2 - t2_lo_;
    if (free == 0) return best;
    for (std::size_t j = idx; j < vars_.size(); ++j) {
      const Var& v = vars_[j];
      const Fraction vertex{v.weight * (base_ - 2 * t2_lo_ - s_all) - v.r * free, v.weight * (t2_lo_ + c_all) + free};
      if (fraction_less<Wide>(vertex.num, vertex.den, best.num, best.den)) best = vertex;
    }
    return best;
  }

  bool pruned(const Fraction& bound, const Bnb& st) const {
    if (st.seed && fraction_less<Wide>(st.seed->num, st.seed->den, bound.num, bound.den)) return true;
    const auto& local = st.result.best;
    return local && !fraction_less<Wide>(bound.num, bound.den, local->num, local->den);
  }

  void bnb_rec(std::size_t idx, const Int& w, const Int& s, const Int& c, Bnb& st) const {
    auto& result = st.result;
    if (st.budget && result.nodes >= *st.budget) {
      result.budget_hit = true;
      return;
    }
    ++result.nodes;
    if (idx == vars_.size()) {
      const Int t2 = total_ - w;
      if (!leaf_admissible(t2, s, c)) return;
      ++result.visited;
      const Fraction h = leaf_value(t2, s, c);
      if (!result.best || fraction_less<Wide>(h.num, h.den, result.best->num, result.best->den)) {
        result.best = h;
        result.best_vector = st.values;
        result.best_vector.push_back(t2);
      }
      return;
    }
    if (pruned(relaxation_bound(idx, w, s, c), st)) return;
    const Var& v = vars_[idx];
    for (Int t = v.lo;; ++t) {
      if (v.hi && t > *v.hi) break;
      const Int next = w + v.weight * t;
      if (next + suffix_weight_[idx + 1] + t2_lo_ > total_) break;
      st.values[idx] = t;
      bnb_rec(idx + 1, next, s + v.r * t, c + t, st);
      if (result.budget_hit) break;
    }
    st.values[idx] = Int(0);
  }

  const SearchProblem& problem_;
  Int total_ = 0;
  Int base_ = 0;
  Int eq_constant_ = 0;
  Int tau_ = 0;
  Int t2_lo_ = 0;
  std::optional<Int> t2_hi_;
  std::vector<Var> vars_;
  std::vector<Int> suffix_weight_;
  std::vector<Int> suffix_s_;
  std::vector<Int> suffix_c_;
};

/// True when every intermediate of the engine fits comfortably in int64_t (products go through __int128).
inline bool fits_machine_words(const SearchProblem& p) {
  const Integer limit = Integer(1) << 60;
  const Integer tau(p.tau);
  if (tau * tau * tau * p.incidence_total() * 8 >= limit) return false;
  for (const auto& [r, range] : p.caps) {
    if (range.min >= limit) return false;
    if (range.max && *range.max >= limit) return false;
  }
  return true;
}

template <class Int>
SearchResult minimize_with(const SearchProblem& problem, const SearchOptions& options) {
  using Engine = SearchEngine<Int>;
  Engine engine(problem);
  SearchResult out;

  const auto seeded = engine.seed();
  std::optional<typename Engine::Fraction> seed;
  if (seeded) seed = seeded->first;

  const auto [lo, hi] = engine.top_range();
  std::vector<Int> tops;
  for (Int t = lo; t <= hi; ++t) tops.push_back(t);
  std::vector<typename Engine::TaskResult> results(tops.size());

  if (options.node_budget || options.jobs <= 1 || tops.size() <= 1) {
    std::optional<std::uint64_t> remaining = options.node_budget;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      results[i] = engine.run_task(tops[i], seed, remaining);
      if (remaining) *remaining -= std::min(*remaining, results[i].nodes);
      if (results[i].budget_hit || (remaining && *remaining == 0 && i + 1 < tops.size())) {
        results[i].budget_hit = true;
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::min<unsigned>(options.jobs, static_cast<unsigned>(tops.size()));
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < workers; ++k) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tops.size(); i = next++) results[i] = engine.run_task(tops[i], seed, std::nullopt);
      });
    }
  }

  bool budget_hit = false;
  const typename Engine::TaskResult* winner = nullptr;
  for (const auto& r : results) {
    out.admissible_visited += r.visited;
    out.nodes += r.nodes;
    budget_hit = budget_hit || r.budget_hit;
    if (!r.best) continue;
    if (!winner) {
      winner = &r;
      continue;
    }
    using Wide = typename Engine::Wide;
    const auto& a = *r.best;
    const auto& b = *winner->best;
    if (fraction_less<Wide>(a.num, a.den, b.num, b.den) ||
        (!fraction_less<Wide>(b.num, b.den, a.num, a.den) && Engine::lex_less(r.best_vector, winner->best_vector))) {
      winner = &r;
    }
  }

  // The seed is itself admissible; it only matters when the budget cut the search short.
  typename Engine::TaskResult seed_result;
  if (seeded) {
    seed_result.best = seeded->first;
    seed_result.best_vector = seeded->second;
    using Wide = typename Engine::Wide;
    const auto& a = seeded->first;
    if (!winner || fraction_less<Wide>(a.num, a.den, winner->best->num, winner->best->den) ||
        (!fraction_less<Wide>(winner->best->num, winner->best->den, a.num, a.den) &&
         Engine::lex_less(seed_result.best_vector, winner->best_vector))) {
      winner = &seed_result;
    }
  }

  if (winner) {
    std::vector<Int> values(winner->best_vector.begin(), winner->best_vector.end() - 1);
    out.best = engine.to_combinatorics(values, winner->best_vector.back());
    out.best_h = Rational(Integer(winner->best->num), Integer(winner->best->den));
  }
  if (budget_hit) {
    out.status = SearchStatus::budget_exhausted;
  } else {
    out.status = winner ? SearchStatus::optimal : SearchStatus::infeasible;
  }
  return out;
}

template <class Int, class Visitor>
EnumerationSummary enumerate_with(const SearchProblem& problem, std::uint64_t budget, Visitor& visit) {
  SearchEngine<Int> engine(problem);
  EnumerationSummary summary;
  engine.enumerate([&](const std::vector<Int>& values, const Int& t2) {
    if (summary.emitted >= budget) {
      summary.complete = false;
      return false;
    }
    ++summary.emitted;
    if (!visit(engine.to_combinatorics(values, t2))) {
      summary.complete = false;
      return false;
    }
    return true;
  });
  return summary;
}

}  // namespace detail

/**
 * @brief Streams every admissible vector in lexicographic order on
 * (t_{tau-1}, ..., t_2), at most `budget` of them.
 *
 * Admissible means: the incidence identity d^2 C(tau,2) = sum C(r,2) t_r,
 * t_tau = 0, the caps, and whichever optional constraints the problem
 * enables. The visitor receives an ArrangementCombinatorics and returns
 * false to stop early.
 */
template <class Visitor>
EnumerationSummary enumerate_admissible(const SearchProblem& problem, std::uint64_t budget, Visitor&& visit) {
  problem.validate();
  if (budget == 0) throw PreconditionError("enumeration budget must be positive");
  if (detail::fits_machine_words(problem)) return detail::enumerate_with<std::int64_t>(problem, budget, visit);
  return detail::enumerate_with<Integer>(problem, budget, visit);
}

/**
 * @brief Exact minimum of h = (d^2 tau - f_1) / f_0 over admissible vectors.
 *
 * Branch and bound over the top-level value of t_{tau-1}; each value is an
 * independent task, so results and node counts do not depend on the number
 * of jobs. Ties are broken by the lexicographically smallest vector.
 */
inline SearchResult minimize_h(const SearchProblem& problem, const SearchOptions& options = {}) {
  problem.validate();
  if (detail::fits_machine_words(problem)) return detail::minimize_with<std::int64_t>(problem, options);
  return detail::minimize_with<Integer>(problem, options);
}

struct InfimumRow {
  std::int64_t tau = 0;
  SearchResult result;
  Rational degree_bound;  ///< (9/2) d - (5/2) d^2 - 4
  bool above_degree_bound = true;
  bool below_bnc_threshold = false;  ///< best h < -4
};

/// Per tau in [tau_min, tau_max]: the best h, compared with the degree bound and with -4.
inline std::vector<InfimumRow> infimum_report(const Integer& d, std::int64_t tau_min, std::int64_t tau_max,
                                              bool hirzebruch, bool point_count, const SearchOptions& options = {}) {
  if (tau_min > tau_max) throw PreconditionError("empty tau range");
  const Rational bound = degree_harbourne_lower_bound(d);
  std::vector<InfimumRow> rows;
  for (std::int64_t tau = tau_min; tau <= tau_max; ++tau) {
    SearchProblem problem{d, tau, hirzebruch, point_count, {}};
    InfimumRow row{tau, minimize_h(problem, options), bound, true, false};
    if (row.result.best_h) {
      row.above_degree_bound = *row.result.best_h >= bound;
      row.below_bnc_threshold = *row.result.best_h < -4;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::optimal:
      return "optimal";
    case SearchStatus::budget_exhausted:
      return "budget-exhausted";
    case SearchStatus::infeasible:
      return "infeasible";
  }
  return "unknown";
}

}  // namespace harbourne
