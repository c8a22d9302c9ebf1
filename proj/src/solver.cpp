#include "linematch/solver.hpp"

#include <chrono>

#include "linematch/instance.hpp"
#include "linematch/mm_linear.hpp"
#include "linematch/olcmm.hpp"
#include "linematch/oracle.hpp"

namespace linematch {

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::Mm:
      return "mm";
    case Algorithm::Olcmm:
      return "olcmm";
    case Algorithm::Oracle:
      return "oracle";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Mm, Algorithm::Olcmm, Algorithm::Oracle}) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

SolveResult run_solver(Algorithm algo, const ProblemInstance& inst) {
  using Clock = std::chrono::steady_clock;
  SolveResult out;
  SolveStats stats;
  const auto start = Clock::now();
  switch (algo) {
    case Algorithm::Mm:
      out.matching = mm::solve_mm(inst, &stats);
      break;
    case Algorithm::Olcmm:
      out.matching = olcmm::solve_olcmm(inst, &stats);
      break;
    case Algorithm::Oracle: {
      const Feasibility feasible = check_feasibility(inst);
      if (!feasible) throw InfeasibleError(feasible.reason);
      auto m = oracle::oracle_olcmm(inst, &stats);
      if (!m) throw InfeasibleError("no circulation meets the degree bounds");
      out.matching = std::move(*m);
      break;
    }
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  out.examined = stats.examined;
  return out;
}

}  // namespace linematch
