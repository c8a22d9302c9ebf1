#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "linematch/instance.hpp"
#include "linematch/types.hpp"

namespace linematch::testing {

inline ProblemInstance make(std::initializer_list<RawPoint> s, std::initializer_list<RawPoint> t) {
  const std::vector<RawPoint> sv(s);
  const std::vector<RawPoint> tv(t);
  return normalize(sv, tv);
}

/// Costs in tests stay far below 2^63; printing them as int64 keeps gtest
/// failure messages readable.
inline long long ll(Cost c) { return c >= kInfiniteCost ? -1 : static_cast<long long>(c); }

inline ProblemInstance translated(const ProblemInstance& inst, Coord delta) {
  ProblemInstance out = inst;
  for (Point& p : out.s_points) p.coord += delta;
  for (Point& p : out.t_points) p.coord += delta;
  return out;
}

inline ProblemInstance scaled(const ProblemInstance& inst, Coord factor) {
  ProblemInstance out = inst;
  for (Point& p : out.s_points) p.coord *= factor;
  for (Point& p : out.t_points) p.coord *= factor;
  return out;
}

/// S and T exchanged; sides and labels follow.
inline ProblemInstance swapped(const ProblemInstance& inst) {
  ProblemInstance out;
  out.s_points = inst.t_points;
  out.t_points = inst.s_points;
  for (Point& p : out.s_points) p.side = Side::S;
  for (Point& p : out.t_points) p.side = Side::T;
  return out;
}

}  // namespace linematch::testing
