#pragma once

#include <span>
#include <vector>

#include "linematch/instance.hpp"
#include "linematch/types.hpp"

// Minimum-cost many-to-many matching without capacities, in O(n) over the
// sorted input.
//
// Notation: for the block pair (A_w, A_{w+1}) write A_w = a_1..a_s and
// A_{w+1} = b_1..b_t. C(p) is the cost of an optimal matching of the closed
// prefix {q : q <= p} in merged order (infinite while no such matching exists,
// e.g. for every point of A_0).
//
// In an optimal matching every pair joins adjacent blocks and each block has a
// separating index h: a_1..a_h are covered by the prefix ending at a_h, and
// a_{h+1}..a_s are paired with b_1..b_i. With m = s - h right-matched points,
// the cheapest covering of {a_{h+1..s}} ∪ {b_1..b_i} pairs them in order and
// puts the surplus on the innermost point (b_1 if m > i, a_s if m < i).
// Splitting on m >= i versus m < i turns the minimum over h into a prefix
// minimum and a suffix minimum, so every C(b_i) costs O(1) after an O(s)
// table build at b_1.
namespace linematch::mm {

/// C(b_i) for w = 0: cost of covering A_0 ∪ {b_1..b_i} when nothing lies to
/// the left of A_0. `a` and `b` are the coordinates of A_0 and A_1; 1 <= i <= |b|.
Cost case0_cost(std::span<const Coord> a, std::span<const Coord> b, std::size_t i);

/// Candidate tables for the block pair being processed.
struct BlockTables {
  std::size_t w = 0;  // processing (A_w, A_{w+1})
  std::size_t s = 0;
  Coord b1 = 0;
  Coord a_s = 0;
  // best_p[k] = min_{h <= k} C(a_h) - Σ_{j>h} a_j + (s-h)·b_1
  std::vector<Cost> best_p;
  std::vector<std::size_t> arg_p;
  // best_q[k] = min_{h >= k} C(a_h) - Σ_{j>h} a_j - h·a_s   (index s+1 is empty)
  std::vector<Cost> best_q;
  std::vector<std::size_t> arg_q;
  Cost b_sum = 0;  // Σ b_j over the b's inserted so far
  std::size_t inserted = 0;
};

struct MmState {
  explicit MmState(const Partition& part);

  std::vector<Cost> c;              // C(p) per merged position
  std::vector<std::size_t> choice;  // separating index h behind C(p)
  BlockTables tables;
  std::uint64_t examined = 0;
};

/// Starts the block pair (A_w, A_{w+1}): builds the candidate tables over the
/// separating index of A_w and computes C(b_1). Each point of A_w is examined
/// once here and never again.
void insert_b1(MmState& state, const Partition& part, std::size_t w);

/// Computes C(b_i) for the next b of the current block pair (i >= 2).
void extend_bi(MmState& state, const Partition& part);

/// Pairs of the optimal matching of the closed prefix ending at merged
/// position `end` (which must not lie in A_0).
std::vector<Pair> reconstruct(const MmState& state, const Partition& part, std::size_t end);

/// Per block, the 0-based index of its first point with a partner in a later
/// block (the block size if there is none).
std::vector<std::size_t> separating_indices(const Partition& part, std::span<const Pair> pairs);

/// Optimal many-to-many matching; capacities in `inst` are ignored.
Matching solve_mm(const ProblemInstance& inst, SolveStats* stats = nullptr);

/// Runs the full dynamic program and returns the state (C table and choices).
MmState run_dp(const Partition& part);

}  // namespace linematch::mm
