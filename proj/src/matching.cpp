#include "linematch/matching.hpp"

#include <algorithm>
#include <set>

namespace linematch {

namespace {

Coord s_coord(const ProblemInstance& inst, const Pair& p) { return inst.s_points[p.s].coord; }
Coord t_coord(const ProblemInstance& inst, const Pair& p) { return inst.t_points[p.t].coord; }

// Orientation of a positive-length pair: true when the S endpoint is on the left.
bool s_on_left(const ProblemInstance& inst, const Pair& p) { return s_coord(inst, p) < t_coord(inst, p); }

bool crosses(const ProblemInstance& inst, const Pair& ac, const Pair& bd) {
  const Coord sa = s_coord(inst, ac);
  const Coord ta = t_coord(inst, ac);
  const Coord sb = s_coord(inst, bd);
  const Coord tb = t_coord(inst, bd);
  if (sa == ta || sb == tb) return false;
  if (s_on_left(inst, ac) == s_on_left(inst, bd)) return false;
  const Coord a = std::min(sa, ta);
  const Coord c = std::max(sa, ta);
  const Coord b = std::min(sb, tb);
  const Coord d = std::max(sb, tb);
  return a <= b && b < c && c <= d;
}

}  // namespace

Cost matching_cost(const ProblemInstance& inst, std::span<const Pair> pairs) {
  Cost total = 0;
  for (const Pair& p : pairs) total += distance(s_coord(inst, p), t_coord(inst, p));
  return total;
}

Degrees degrees(const ProblemInstance& inst, std::span<const Pair> pairs) {
  Degrees deg{std::vector<Capacity>(inst.s_points.size(), 0),
              std::vector<Capacity>(inst.t_points.size(), 0)};
  for (const Pair& p : pairs) {
    ++deg.s[p.s];
    ++deg.t[p.t];
  }
  return deg;
}

void sort_pairs(std::vector<Pair>& pairs) {
  // Points are sorted by coordinate within a side, so index order is coordinate order.
  std::sort(pairs.begin(), pairs.end());
}

Matching make_matching(const ProblemInstance& inst, std::vector<Pair> pairs) {
  sort_pairs(pairs);
  Matching m;
  m.total_cost = matching_cost(inst, pairs);
  m.pairs = std::move(pairs);
  return m;
}

std::optional<std::string> validate_matching(const ProblemInstance& inst, const Matching& m,
                                             bool check_caps) {
  std::set<Pair> seen;
  for (const Pair& p : m.pairs) {
    if (p.s >= inst.s_points.size() || p.t >= inst.t_points.size()) {
      return "pair index out of range";
    }
    if (!seen.insert(p).second) {
      return "duplicate pair (S#" + std::to_string(p.s) + ", T#" + std::to_string(p.t) + ")";
    }
  }
  const Degrees deg = degrees(inst, m.pairs);
  for (Side side : {Side::S, Side::T}) {
    const auto& pts = inst.points(side);
    const auto& d = side == Side::S ? deg.s : deg.t;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (d[i] < 1) return std::string(1, side_char(side)) + "#" + std::to_string(i) + " is unmatched";
      if (check_caps && d[i] > pts[i].cap) {
        return std::string(1, side_char(side)) + "#" + std::to_string(i) + " has degree " +
               std::to_string(d[i]) + " > cap " + std::to_string(pts[i].cap);
      }
    }
  }
  if (const Cost actual = matching_cost(inst, m.pairs); actual != m.total_cost) {
    return "recorded cost " + to_string(m.total_cost) + " != recomputed " + to_string(actual);
  }
  return std::nullopt;
}

std::optional<Crossing> find_crossing(const ProblemInstance& inst, std::span<const Pair> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i != j && crosses(inst, pairs[i], pairs[j])) return Crossing{pairs[i], pairs[j]};
    }
  }
  return std::nullopt;
}

bool one_direction_per_gap(const Partition& part, std::span<const Pair> pairs) {
  const auto merged = part.merged();
  if (merged.size() < 2) return true;
  // Difference arrays over gaps: gap k lies between merged positions k and k+1.
  std::vector<std::int64_t> rightward(merged.size(), 0);  // S on the left
  std::vector<std::int64_t> leftward(merged.size(), 0);   // T on the left
  for (const Pair& p : pairs) {
    const std::size_t ps = part.position_of(Side::S, p.s);
    const std::size_t pt = part.position_of(Side::T, p.t);
    auto& diff = ps < pt ? rightward : leftward;
    ++diff[std::min(ps, pt)];
    --diff[std::max(ps, pt)];
  }
  std::int64_t right = 0;
  std::int64_t left = 0;
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
    right += rightward[k];
    left += leftward[k];
    if (right > 0 && left > 0 && merged[k + 1].coord > merged[k].coord) return false;
  }
  return true;
}

std::optional<Pair> find_non_adjacent_pair(const Partition& part, std::span<const Pair> pairs) {
  for (const Pair& p : pairs) {
    const std::size_t bs = part.block_of(part.position_of(Side::S, p.s));
    const std::size_t bt = part.block_of(part.position_of(Side::T, p.t));
    if (bs + 1 != bt && bt + 1 != bs) return p;
  }
  return std::nullopt;
}

Matching uncross(const ProblemInstance& inst, Matching m) {
  std::set<Pair> pairs(m.pairs.begin(), m.pairs.end());
  for (;;) {
    const std::vector<Pair> current(pairs.begin(), pairs.end());
    const auto crossing = find_crossing(inst, current);
    if (!crossing) break;
    const Pair ac = crossing->first;
    const Pair bd = crossing->second;
    pairs.erase(ac);
    pairs.erase(bd);
    // (a,b) and (c,d) are exactly the two pairs with exchanged partners.
    pairs.insert(Pair{ac.s, bd.t});
    pairs.insert(Pair{bd.s, ac.t});
  }
  return make_matching(inst, std::vector<Pair>(pairs.begin(), pairs.end()));
}

}  // namespace linematch
