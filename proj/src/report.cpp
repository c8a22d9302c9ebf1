#include "linematch/report.hpp"

#include <ostream>

namespace linematch {

RunReport make_report(std::string algorithm, const ProblemInstance& inst, const Matching& m,
                      double elapsed_ms, std::uint64_t examined) {
  RunReport r;
  r.algorithm = std::move(algorithm);
  r.total_cost = m.total_cost;
  r.elapsed_ms = elapsed_ms;
  r.examined = examined;
  r.pairs.reserve(m.pairs.size());
  for (const Pair& p : m.pairs) {
    r.pairs.emplace_back(inst.s_points[p.s].orig_id, inst.t_points[p.t].orig_id);
  }
  return r;
}

void write_report(std::ostream& out, const RunReport& report, bool timing) {
  out << "# algo\t" << report.algorithm << '\n';
  out << "# cost\t" << to_string(report.total_cost) << '\n';
  out << "# ops\t" << report.examined << '\n';
  if (timing) out << "# elapsed_ms\t" << report.elapsed_ms << '\n';
  for (const auto& [s, t] : report.pairs) out << "pair\t" << s << '\t' << t << '\n';
}

}  // namespace linematch
