#include "linematch/olcmm.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "linematch/matching.hpp"

namespace linematch::olcmm {

FlowProfile::FlowProfile() {
  left_.emplace(0, kWall);
  right_.emplace(0, kWall);
}

void FlowProfile::widen(Coord lo, Coord hi) {
  assert(lo <= hi);
  left_shift_ += lo;
  right_shift_ += hi;
  domain_low_ += lo;
  domain_high_ += hi;
  ++work_;
}

void FlowProfile::charge_gap(Cost len) {
  if (len == 0) return;
  add_ramp_up(0, len);
  add_ramp_down(0, len);
}

void FlowProfile::add_ramp_up(Coord at, Cost len) {
  ++work_;
  if (at >= lower_argmin()) {
    right_[at - right_shift_] += len;
    return;
  }
  // The new slope lands left of the minimum: the top `len` units of left
  // slope now sit right of the minimum.
  left_[at - left_shift_] += len;
  Cost rest = len;
  while (rest > 0) {
    ++work_;
    auto top = std::prev(left_.end());
    const Coord pos = top->first + left_shift_;
    const Cost moved = std::min(top->second, rest);
    min_value_ += moved * static_cast<Cost>(pos - at);
    right_[pos - right_shift_] += moved;
    if (top->second == moved) {
      left_.erase(top);
    } else {
      top->second -= moved;
    }
    rest -= moved;
  }
}

void FlowProfile::add_ramp_down(Coord at, Cost len) {
  ++work_;
  if (at <= upper_argmin()) {
    left_[at - left_shift_] += len;
    return;
  }
  right_[at - right_shift_] += len;
  Cost rest = len;
  while (rest > 0) {
    ++work_;
    auto top = right_.begin();
    const Coord pos = top->first + right_shift_;
    const Cost moved = std::min(top->second, rest);
    min_value_ += moved * static_cast<Cost>(at - pos);
    left_[pos - left_shift_] += moved;
    if (top->second == moved) {
      right_.erase(top);
    } else {
      top->second -= moved;
    }
    rest -= moved;
  }
}

Cost FlowProfile::value_at(Coord flow) const {
  if (flow < domain_low() || flow > domain_high()) return kInfiniteCost;
  Cost value = min_value_;
  if (flow < lower_argmin()) {
    for (auto it = left_.rbegin(); it != left_.rend(); ++it) {
      const Coord pos = it->first + left_shift_;
      if (pos <= flow) break;
      ++work_;
      value += it->second * static_cast<Cost>(pos - flow);
    }
  } else if (flow > upper_argmin()) {
    for (const auto& [key, weight] : right_) {
      const Coord pos = key + right_shift_;
      if (pos >= flow) break;
      ++work_;
      value += weight * static_cast<Cost>(flow - pos);
    }
  }
  return value;
}

void FlowProfile::sample(Coord from, Coord to, std::vector<Cost>& out) const {
  if (from < domain_low() || from > domain_high()) return;
  if (to >= from) {
    assert(from >= lower_argmin());
    Cost value = min_value_;
    Cost slope = 0;  // slope of f on [flow, flow + 1]
    auto it = right_.begin();
    for (; it != right_.end() && it->first + right_shift_ <= from; ++it) {
      ++work_;
      value += it->second * static_cast<Cost>(from - (it->first + right_shift_));
      slope += it->second;
    }
    out.push_back(value);
    for (Coord flow = from; flow != to && flow < domain_high();) {
      value += slope;
      ++flow;
      for (; it != right_.end() && it->first + right_shift_ <= flow; ++it) {
        ++work_;
        slope += it->second;
      }
      out.push_back(value);
    }
  } else {
    assert(from <= upper_argmin());
    Cost value = min_value_;
    Cost slope = 0;  // minus the slope of f on [flow - 1, flow]
    auto it = left_.rbegin();
    for (; it != left_.rend() && it->first + left_shift_ >= from; ++it) {
      ++work_;
      value += it->second * static_cast<Cost>((it->first + left_shift_) - from);
      slope += it->second;
    }
    out.push_back(value);
    for (Coord flow = from; flow != to && flow > domain_low();) {
      value += slope;
      --flow;
      for (; it != left_.rend() && it->first + left_shift_ >= flow; ++it) {
        ++work_;
        slope += it->second;
      }
      out.push_back(value);
    }
  }
}

// ---------------------------------------------------------------------------

CostLedger::CostLedger(std::size_t points) : begin_(points, 0), count_(points, 0) {}

void CostLedger::store(std::size_t p, Capacity k, Cost value) {
  assert(p < points());
  if (count_[p] == 0) {
    begin_[p] = values_.size();
  } else {
    assert(begin_[p] + count_[p] == values_.size() && ks_.back() < k);
  }
  ks_.push_back(k);
  values_.push_back(value);
  ++count_[p];
}

Cost CostLedger::get(std::size_t p, Capacity k) const {
  const auto first = ks_.begin() + static_cast<std::ptrdiff_t>(begin_[p]);
  const auto last = first + static_cast<std::ptrdiff_t>(count_[p]);
  const auto it = std::upper_bound(first, last, k);
  if (it == first) return kInfiniteCost;
  return values_[static_cast<std::size_t>(it - ks_.begin()) - 1];
}

Capacity CostLedger::best_degree(std::size_t p) const {
  return count_[p] == 0 ? 0 : ks_[begin_[p] + count_[p] - 1];
}

Cost ledger_get(const CostLedger& ledger, std::size_t p, Capacity k) {
  if (k > 0) return ledger.get(p, k);
  if (p == 0) return 0;
  const Capacity best = ledger.best_degree(p - 1);
  return best == 0 ? kInfiniteCost : ledger.get(p - 1, best);
}

// ---------------------------------------------------------------------------

MatchState::MatchState(const Partition& part, std::span<const Pair> pairs)
    : start_(part.merged().size() + 1, 0), partners_(2 * pairs.size()) {
  for (const Pair& pr : pairs) {
    ++start_[part.position_of(Side::S, pr.s) + 1];
    ++start_[part.position_of(Side::T, pr.t) + 1];
  }
  for (std::size_t p = 1; p < start_.size(); ++p) start_[p] += start_[p - 1];
  std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
  for (const Pair& pr : pairs) {
    const std::size_t s = part.position_of(Side::S, pr.s);
    const std::size_t t = part.position_of(Side::T, pr.t);
    partners_[fill[s]++] = t;
    partners_[fill[t]++] = s;
  }
  for (std::size_t p = 0; p + 1 < start_.size(); ++p) {
    std::sort(partners_.begin() + static_cast<std::ptrdiff_t>(start_[p]),
              partners_.begin() + static_cast<std::ptrdiff_t>(start_[p + 1]));
  }
}

// ---------------------------------------------------------------------------

namespace {

constexpr Coord sign(Side side) { return side == Side::S ? 1 : -1; }

// A point can never use more partners than the other side has.
std::vector<Capacity> effective_caps(const Partition& part) {
  const auto merged = part.merged();
  std::size_t count[2] = {0, 0};
  for (const MergedPoint& p : merged) ++count[static_cast<int>(p.side)];
  std::vector<Capacity> caps(merged.size());
  for (std::size_t k = 0; k < merged.size(); ++k) {
    const auto other = static_cast<Capacity>(count[1 - static_cast<int>(merged[k].side)]);
    caps[k] = std::min(merged[k].cap, other);
  }
  return caps;
}

// C(p, 1..d*) from f_{p-1}, the profile before p is folded in.
void fill_ledger_entries(const FlowProfile& prof, std::size_t p, Coord sigma, Capacity cap,
                         CostLedger& ledger, std::vector<Cost>& scratch) {
  // g(d) = f(-σd) is convex in d; its smallest minimiser over [1, cap] is d*.
  const Coord best = sigma > 0 ? -prof.upper_argmin() : prof.lower_argmin();
  const Capacity d_star = std::clamp<Capacity>(best, 1, cap);
  scratch.clear();
  // Walk from -σd* back towards 0; values arrive for d = d*, d* - 1, ...
  if (d_star == 1) {
    scratch.push_back(prof.value_at(-sigma));
  } else {
    prof.sample(-sigma * d_star, -sigma, scratch);
  }
  // scratch[i] belongs to d = d* - i. Trailing entries may be missing where
  // the walk left the domain; those degrees are infeasible.
  for (std::size_t i = scratch.size(); i-- > 0;) {
    if (scratch[i] >= kInfiniteCost) continue;
    ledger.store(p, d_star - static_cast<Capacity>(i), scratch[i]);
  }
}

}  // namespace

Sweep sweep(const Partition& part, bool fill_ledger) {
  const auto merged = part.merged();
  const std::size_t n = merged.size();
  const std::vector<Capacity> caps = effective_caps(part);

  Sweep out;
  out.ledger = CostLedger(fill_ledger ? n : 0);
  FlowProfile prof;
  std::vector<Coord> argmin(n);  // lower argmin of f_k
  std::vector<Cost> scratch;
  for (std::size_t k = 0; k < n; ++k) {
    ++out.examined;
    const Coord sigma = sign(merged[k].side);
    if (fill_ledger) fill_ledger_entries(prof, k, sigma, caps[k], out.ledger, scratch);
    if (sigma > 0) {
      prof.widen(1, caps[k]);
    } else {
      prof.widen(-caps[k], -1);
    }
    if (k + 1 < n) prof.charge_gap(distance(merged[k + 1].coord, merged[k].coord));
    argmin[k] = prof.lower_argmin();
  }
  out.cost = prof.value_at(0);
  out.examined += prof.work();
  if (out.cost >= kInfiniteCost) return out;

  // Walk back: the flow left of k is the point of the window allowed by k's
  // degree bounds that is closest to f_{k-1}'s minimum.
  out.degree.assign(n, 0);
  Coord flow = 0;
  for (std::size_t k = n; k-- > 0;) {
    const Coord sigma = sign(merged[k].side);
    const Coord a = flow - sigma * caps[k];
    const Coord b = flow - sigma;
    const Coord target = k > 0 ? argmin[k - 1] : 0;
    const Coord prev = std::clamp(target, std::min(a, b), std::max(a, b));
    out.degree[k] = sigma * (flow - prev);
    flow = prev;
  }
  assert(flow == 0);
  return out;
}

std::vector<Pair> assemble_pairs(const Partition& part, std::span<const Capacity> degree) {
  const auto merged = part.merged();
  struct Open {
    std::size_t pos;
    Capacity units;
  };
  std::deque<Open> open;
  std::vector<Pair> pairs;
  const auto make_pair = [&](std::size_t x, std::size_t y) {
    const MergedPoint& px = merged[x];
    const MergedPoint& py = merged[y];
    return px.side == Side::S ? Pair{px.index, py.index} : Pair{py.index, px.index};
  };
  for (std::size_t k = 0; k < merged.size(); ++k) {
    Capacity units = degree[k];
    while (units > 0 && !open.empty() && merged[open.front().pos].side != merged[k].side) {
      Open& front = open.front();
      const Pair pr = make_pair(front.pos, k);
      // Two units of one open point reaching k repeat a pair; that only
      // happens at zero distance and the copy is dropped.
      if (pairs.empty() || pairs.back() != pr) {
        pairs.push_back(pr);
      } else {
        assert(merged[front.pos].coord == merged[k].coord);
      }
      --units;
      if (--front.units == 0) open.pop_front();
    }
    if (units > 0) open.push_back({k, units});
  }
  assert(open.empty());
  return pairs;
}

Matching solve_olcmm(const ProblemInstance& inst, SolveStats* stats) {
  if (inst.s_points.empty()) throw EmptySideError(Side::S);
  if (inst.t_points.empty()) throw EmptySideError(Side::T);
  const Feasibility feasible = check_feasibility(inst);
  if (!feasible) throw InfeasibleError(feasible.reason);
  const Partition part(inst);
  const Sweep run = sweep(part);
  assert(run.cost < kInfiniteCost);
  Matching m = make_matching(inst, assemble_pairs(part, run.degree));
  assert(m.total_cost == run.cost);
  if (stats != nullptr) {
    stats->examined = run.examined;
    stats->ledger_entries = run.ledger.size();
  }
  return m;
}

}  // namespace linematch::olcmm
