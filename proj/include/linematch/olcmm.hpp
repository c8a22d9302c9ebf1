#pragma once

#include <map>
#include <span>
#include <vector>

#include "linematch/instance.hpp"
#include "linematch/types.hpp"

// Minimum-cost many-to-many matching with per-point capacities.
//
// Walk the merged order and let F be the net number of pair endpoints crossing
// the gap to the right of the current point (S endpoints count +1, T
// endpoints -1). Any optimal matching can be untangled so that the pairs over
// a gap all point the same way, so a gap of length len costs len·|F|. Let
// f_k(F) be the cheapest way to give points 0..k degrees in [1, cap] leaving F
// open. f_k is convex and piecewise linear, and
//
//   f_k(F) = min_{1 <= d <= cap_k} f_{k-1}(F - σ_k d) + len_k·|F|,
//
// with σ = +1 for S and -1 for T. The minimisation slides the two halves of
// the profile apart and the gap charge adds two ramps; both are O(1)
// amortised breakpoint moves. The optimum is f_{n-1}(0), and degrees are
// read back by clamping each stored argmin into the admissible window.
namespace linematch::olcmm {

/// Convex piecewise-linear function of the integer flow F, +∞ outside a
/// closed interval. Breakpoints are kept as (position, slope change) in two
/// ordered halves with lazy offsets: `left_` holds the breakpoints at or left
/// of the minimum, `right_` those at or right of it. Each domain end carries
/// a breakpoint of weight kWall; ramps added later may leave finite
/// breakpoints outside the domain, which never affect values inside it.
class FlowProfile {
 public:
  static constexpr Cost kWall = Cost{1} << 120;

  /// f(0) = 0, +∞ elsewhere.
  FlowProfile();

  /// f(F) <- min_{lo <= x <= hi} f(F - x).
  void widen(Coord lo, Coord hi);
  /// f(F) <- f(F) + len·|F|.
  void charge_gap(Cost len);

  Coord lower_argmin() const { return left_.rbegin()->first + left_shift_; }
  Coord upper_argmin() const { return right_.begin()->first + right_shift_; }
  Coord domain_low() const { return domain_low_; }
  Coord domain_high() const { return domain_high_; }
  Cost min_value() const { return min_value_; }

  /// f(F), or kInfiniteCost outside the domain. Walks the breakpoints between
  /// the minimum and F.
  Cost value_at(Coord flow) const;

  /// f(from), f(from + step), ..., f(to) for step = ±1, appended to `out`.
  /// `from` must lie in the domain and the walk must lead away from the
  /// minimum; stops early at the domain end.
  void sample(Coord from, Coord to, std::vector<Cost>& out) const;

  std::size_t breakpoints() const { return left_.size() + right_.size(); }
  std::uint64_t work() const { return work_; }

 private:
  void add_ramp_up(Coord at, Cost len);    // len·max(0, F - at)
  void add_ramp_down(Coord at, Cost len);  // len·max(0, at - F)

  std::map<Coord, Cost> left_;
  std::map<Coord, Cost> right_;
  Coord left_shift_ = 0;
  Coord right_shift_ = 0;
  Coord domain_low_ = 0;
  Coord domain_high_ = 0;
  Cost min_value_ = 0;
  mutable std::uint64_t work_ = 0;
};

/// C(p,k): cost of an optimal matching of the closed prefix ending at merged
/// position p when p may take at most k partners. Stored for k = 1..d*(p),
/// where d*(p) is the smallest best degree; past d*(p) the value no longer
/// changes. Values that are +∞ are not stored.
class CostLedger {
 public:
  explicit CostLedger(std::size_t points = 0);

  /// Appends C(p,k). A point's entries are stored together with k increasing.
  void store(std::size_t p, Capacity k, Cost value);
  /// Stored value, the value at the largest stored k when k lies beyond it,
  /// and kInfiniteCost when nothing at or below k is stored.
  Cost get(std::size_t p, Capacity k) const;
  /// Largest stored k for p, 0 if none.
  Capacity best_degree(std::size_t p) const;
  std::size_t size() const { return values_.size(); }
  std::size_t points() const { return begin_.size(); }

 private:
  std::vector<std::size_t> begin_;  // p's entries are [begin_[p], begin_[p] + count_[p])
  std::vector<std::uint32_t> count_;
  std::vector<Capacity> ks_;
  std::vector<Cost> values_;
};

/// ledger.get(p, k) for k >= 1. For k = 0 the point contributes nothing and
/// the value is the best cost of the prefix closed just before p: 0 for the
/// first point, C(q, d*(q)) for its predecessor q otherwise.
Cost ledger_get(const CostLedger& ledger, std::size_t p, Capacity k);

/// Per-point degree and partner log M(p, 1..deg(p)), in merged positions.
class MatchState {
 public:
  MatchState(const Partition& part, std::span<const Pair> pairs);

  Capacity deg(std::size_t p) const { return static_cast<Capacity>(start_[p + 1] - start_[p]); }
  /// M(p,k), 1 <= k <= deg(p); partners are listed in merged order.
  std::size_t partner(std::size_t p, Capacity k) const {
    return partners_[start_[p] + static_cast<std::size_t>(k - 1)];
  }
  std::size_t points() const { return start_.size() - 1; }

 private:
  std::vector<std::size_t> start_;
  std::vector<std::size_t> partners_;
};

/// Everything the sweep produces.
struct Sweep {
  Cost cost = kInfiniteCost;
  std::vector<Capacity> degree;  // per merged position
  CostLedger ledger;
  std::uint64_t examined = 0;
};

/// Runs the profile sweep over a feasible instance. With `fill_ledger`, the
/// C(p,k) entries are recorded as well.
Sweep sweep(const Partition& part, bool fill_ledger = true);

/// Turns optimal degrees into pairs: a left-to-right pass in which each point
/// first serves the oldest open endpoints of the other side and then leaves
/// the rest of its degree open. Pairs are returned as side indices.
std::vector<Pair> assemble_pairs(const Partition& part, std::span<const Capacity> degree);

/// Optimal capacitated matching. Throws InfeasibleError when no covering
/// within the capacities exists.
Matching solve_olcmm(const ProblemInstance& inst, SolveStats* stats = nullptr);

}  // namespace linematch::olcmm
