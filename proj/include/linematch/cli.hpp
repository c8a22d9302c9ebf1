#pragma once

#include <functional>
#include <iosfwd>

#include "linematch/solver.hpp"
#include "linematch/types.hpp"

namespace linematch::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInfeasible = 2;
inline constexpr int kVerifyFailed = 3;

struct Hooks {
  /// Solver checked by `verify`; defaults to run_solver(). Tests swap in a
  /// broken one.
  std::function<Matching(Algorithm, const ProblemInstance&)> solve;
};

/// linematch solve  FILE [--algo mm|olcmm|oracle] [--timing]
/// linematch verify FILE [--algo mm|olcmm]
/// linematch verify --random N [SEED] [--algo mm|olcmm]
/// linematch gen    N_S N_T CAP_MAX COORD_MAX SEED
/// linematch bench  [--sizes 1e3,1e4] [--reps 5] [--seed S] [--csv PATH]
///
/// LINEMATCH_SEED replaces the default seed of verify and bench.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace linematch::cli
