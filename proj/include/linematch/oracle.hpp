#pragma once

#include <optional>
#include <vector>

#include "linematch/instance.hpp"
#include "linematch/types.hpp"

// Independent ground truth for both solvers. Nothing here looks at blocks,
// separating points or flow profiles.
namespace linematch::oracle {

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  Capacity lower = 0;
  Capacity upper = 0;
  Cost unit_cost = 0;
};

/// source -> s  [1, cap(s)]   cost 0
/// s -> t       [0, 1]        cost |s - t|      (every S×T pair)
/// t -> sink    [1, cap(t)]   cost 0
/// sink -> source [0, Σcap]   cost 0            (closes the circulation)
struct FlowNetwork {
  std::size_t node_count = 0;
  std::size_t source = 0;
  std::size_t sink = 1;
  std::vector<Arc> arcs;
  std::size_t first_pair_arc = 0;  // pair arcs are contiguous, S-major
  std::size_t pair_arc_count = 0;
};

FlowNetwork build_network(const ProblemInstance& inst);

struct Circulation {
  std::vector<Capacity> flow;  // per arc
  Cost cost = 0;
};

/// Minimum-cost circulation respecting lower and upper bounds, or nullopt if
/// none exists. Lower bounds are moved into node excesses and the remainder is
/// solved by successive shortest paths with potentials. Requires non-negative
/// arc costs. `work`, if given, is increased by the number of residual edge
/// scans.
std::optional<Circulation> min_cost_circulation(const FlowNetwork& net,
                                                std::uint64_t* work = nullptr);

/// Exact optimal capacitated matching, or nullopt if infeasible.
std::optional<Matching> oracle_olcmm(const ProblemInstance& inst, SolveStats* stats = nullptr);

/// Exact optimal uncapacitated matching (always exists).
Matching oracle_mm(const ProblemInstance& inst, SolveStats* stats = nullptr);

/// Brute force over every pair subset meeting the degree bounds [1, cap].
/// Returns nullopt if no subset qualifies; throws SizeLimitError if
/// |S| + |T| > limit (limit itself may not exceed 10).
std::optional<Cost> exhaustive(const ProblemInstance& inst, std::size_t limit = 10);

}  // namespace linematch::oracle
