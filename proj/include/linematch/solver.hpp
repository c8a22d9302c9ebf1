#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "linematch/types.hpp"

namespace linematch {

enum class Algorithm { Mm, Olcmm, Oracle };

std::string_view algorithm_name(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct SolveResult {
  Matching matching;
  std::uint64_t examined = 0;
  double elapsed_ms = 0;
};

/// Runs one solver with timing. Mm ignores capacities; Olcmm and Oracle throw
/// InfeasibleError when the capacities admit no covering.
SolveResult run_solver(Algorithm algo, const ProblemInstance& inst);

}  // namespace linematch
