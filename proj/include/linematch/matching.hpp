#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linematch/instance.hpp"
#include "linematch/types.hpp"

namespace linematch {

/// Σ |coord(s) - coord(t)| over the pairs.
Cost matching_cost(const ProblemInstance& inst, std::span<const Pair> pairs);

struct Degrees {
  std::vector<Capacity> s;
  std::vector<Capacity> t;
};
Degrees degrees(const ProblemInstance& inst, std::span<const Pair> pairs);

/// Orders pairs by S coordinate, then T coordinate (indices break ties).
void sort_pairs(std::vector<Pair>& pairs);

/// Sorts the pairs and fills in the recomputed cost.
Matching make_matching(const ProblemInstance& inst, std::vector<Pair> pairs);

/// First violated matching invariant, or nullopt: indices in range, no
/// duplicate pair, every point covered, degree <= cap, stored cost correct.
/// Pass `check_caps = false` for uncapacitated solutions.
std::optional<std::string> validate_matching(const ProblemInstance& inst, const Matching& m,
                                             bool check_caps = true);

/// Two pairs (a,c) and (b,d) with a <= b < c <= d, a and d on one side and
/// b and c on the other. An optimal matching never contains one.
struct Crossing {
  Pair first;   // (a, c)
  Pair second;  // (b, d)
};

/// Quadratic scan; meant for test-sized matchings.
std::optional<Crossing> find_crossing(const ProblemInstance& inst, std::span<const Pair> pairs);

/// Every positive-length gap between consecutive merged points is spanned by
/// pairs of a single orientation. Linear time; implies find_crossing() == nullopt.
bool one_direction_per_gap(const Partition& part, std::span<const Pair> pairs);

/// A pair whose endpoints are not in adjacent blocks, if any.
std::optional<Pair> find_non_adjacent_pair(const Partition& part, std::span<const Pair> pairs);

/// Repeatedly replaces a crossing (a,c),(b,d) by (a,b),(c,d). Degrees are
/// preserved (a pair that already exists is not duplicated) and the cost drops
/// by at least 2|c - b| per swap.
Matching uncross(const ProblemInstance& inst, Matching m);

}  // namespace linematch
