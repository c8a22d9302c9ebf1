#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "linematch/types.hpp"

namespace linematch {

/// Solver output in caller terms: pairs use input-order ids.
struct RunReport {
  std::string algorithm;
  Cost total_cost = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (S orig_id, T orig_id)
  double elapsed_ms = 0;
  std::uint64_t examined = 0;
};

/// Pairs keep the matching's order (S coordinate, then T coordinate).
RunReport make_report(std::string algorithm, const ProblemInstance& inst, const Matching& m,
                      double elapsed_ms, std::uint64_t examined);

/// Tab-separated:
///
///   # algo<TAB>olcmm
///   # cost<TAB>6
///   # ops<TAB>41
///   # elapsed_ms<TAB>0.013      (only with `timing`)
///   pair<TAB>0<TAB>0
///
/// Without timing the output depends only on the instance and algorithm.
void write_report(std::ostream& out, const RunReport& report, bool timing = false);

}  // namespace linematch
