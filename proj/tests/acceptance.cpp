// Acceptance suite: one PASS/FAIL line per criterion.
//
//   linematch_acceptance            run everything
//   linematch_acceptance ID...      run the named criteria
//   linematch_acceptance --list     print the criterion ids
//
// Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linematch/bench.hpp"
#include "linematch/generate.hpp"
#include "linematch/matching.hpp"
#include "linematch/mm_linear.hpp"
#include "linematch/olcmm.hpp"
#include "linematch/oracle.hpp"

namespace linematch {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string cost_str(Cost c) { return c >= kInfiniteCost ? "inf" : to_string(c); }

std::string describe(const ProblemInstance& inst) {
  std::ostringstream out;
  const auto side = [&out](char tag, const std::vector<Point>& pts) {
    out << tag << "={";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out << (i ? "," : "") << pts[i].coord << ':' << pts[i].cap;
    }
    out << '}';
  };
  side('S', inst.s_points);
  out << ' ';
  side('T', inst.t_points);
  return out.str();
}

// Instances shared by the structural checks: the same streams the equality
// criteria use.
constexpr std::uint64_t kMmSeed = 1001;
constexpr std::uint64_t kOlcmmSeed = 2002;
constexpr int kEqualityRounds = 10000;

template <typename Fn>
void for_each_mm_instance(Fn&& fn) {
  std::mt19937_64 rng(kMmSeed);
  for (int i = 0; i < kEqualityRounds; ++i) fn(to_instance(small_mm_instance(rng)));
}

template <typename Fn>
void for_each_olcmm_instance(Fn&& fn) {
  std::mt19937_64 rng(kOlcmmSeed);
  for (int i = 0; i < kEqualityRounds; ++i) fn(to_instance(small_olcmm_instance(rng)));
}

// --- oracle equivalence -----------------------------------------------------------

Verdict mm_oracle() {
  std::size_t equal = 0;
  std::size_t total = 0;
  std::string first_bad;
  for_each_mm_instance([&](const ProblemInstance& inst) {
    const Cost got = mm::solve_mm(inst).total_cost;
    const Cost want = oracle::oracle_mm(inst).total_cost;
    ++total;
    if (got == want) {
      ++equal;
    } else if (first_bad.empty()) {
      first_bad = describe(inst) + " solver=" + cost_str(got) + " oracle=" + cost_str(want);
    }
  });
  Verdict v{equal == total, std::to_string(equal) + "/" + std::to_string(total) +
                                " instances (|S|,|T| in [1,8], coords [0,100)) equal"};
  if (!first_bad.empty()) v.detail += "; first mismatch " + first_bad;
  return v;
}

Verdict olcmm_oracle() {
  std::size_t equal = 0;
  std::size_t total = 0;
  std::string first_bad;
  for_each_olcmm_instance([&](const ProblemInstance& inst) {
    const Cost got = olcmm::solve_olcmm(inst).total_cost;
    const auto want = oracle::oracle_olcmm(inst);
    ++total;
    if (want && got == want->total_cost) {
      ++equal;
    } else if (first_bad.empty()) {
      first_bad = describe(inst) + " solver=" + cost_str(got) +
                  " oracle=" + (want ? cost_str(want->total_cost) : "infeasible");
    }
  });
  Verdict v{equal == total, std::to_string(equal) + "/" + std::to_string(total) +
                                " feasible instances (|S|+|T| <= 10, caps [1,3]) equal"};
  if (!first_bad.empty()) v.detail += "; first mismatch " + first_bad;
  return v;
}

Verdict oracle_self_check() {
  std::mt19937_64 rng(3003);
  std::size_t agree = 0;
  std::size_t infeasible = 0;
  constexpr std::size_t kRounds = 5000;
  std::string first_bad;
  for (std::size_t i = 0; i < kRounds; ++i) {
    GenParams params;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    params.n_s = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    params.n_t = n - params.n_s;
    params.cap_max = 3;
    params.coord_max = 50;
    const ProblemInstance inst = to_instance(generate(params, rng));
    const auto flow = oracle::oracle_olcmm(inst);
    const auto brute = oracle::exhaustive(inst);
    const bool rule = check_feasibility(inst).feasible;
    bool ok = flow.has_value() == brute.has_value() && rule == brute.has_value();
    if (ok && flow) ok = flow->total_cost == *brute && !validate_matching(inst, *flow);
    if (ok) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = describe(inst);
    }
    infeasible += !brute.has_value();
  }
  Verdict v{agree == kRounds, std::to_string(agree) + "/" + std::to_string(kRounds) +
                                  " instances (|S|+|T| <= 8): flow == exhaustive, feasibility "
                                  "verdicts agree (" +
                                  std::to_string(infeasible) + " infeasible)"};
  if (!first_bad.empty()) v.detail += "; first disagreement " + first_bad;
  return v;
}

// --- structural invariants ---------------------------------------------------------

Verdict degree_bounds() {
  std::size_t outputs = 0;
  std::size_t bad = 0;
  std::string first_bad;
  const auto check = [&](const ProblemInstance& inst, const Matching& m, bool caps) {
    ++outputs;
    if (auto err = validate_matching(inst, m, caps)) {
      if (first_bad.empty()) first_bad = describe(inst) + ": " + *err;
      ++bad;
    }
  };
  for_each_mm_instance([&](const ProblemInstance& inst) { check(inst, mm::solve_mm(inst), false); });
  for_each_olcmm_instance(
      [&](const ProblemInstance& inst) { check(inst, olcmm::solve_olcmm(inst), true); });
  Verdict v{bad == 0, std::to_string(outputs - bad) + "/" + std::to_string(outputs) +
                          " outputs cover every point with 1 <= deg <= cap (mm: deg >= 1)"};
  if (!first_bad.empty()) v.detail += "; " + first_bad;
  return v;
}

// Cheapest covering per exact pair count, by enumerating every subset of S×T.
std::map<std::size_t, Cost> cost_by_pair_count(const ProblemInstance& inst) {
  const std::size_t ns = inst.s_points.size();
  const std::size_t nt = inst.t_points.size();
  const std::size_t arcs = ns * nt;
  std::map<std::size_t, Cost> best;
  for (std::uint32_t mask = 1; mask < (1U << arcs); ++mask) {
    std::vector<Pair> pairs;
    for (std::size_t a = 0; a < arcs; ++a) {
      if (mask >> a & 1U) pairs.push_back(Pair{a / nt, a % nt});
    }
    const Matching m = make_matching(inst, pairs);
    if (validate_matching(inst, m)) continue;
    auto [it, fresh] = best.emplace(pairs.size(), m.total_cost);
    if (!fresh) it->second = std::min(it->second, m.total_cost);
  }
  return best;
}

Verdict pair_count() {
  std::size_t outputs = 0;
  std::size_t solver_off = 0;
  std::size_t oracle_off = 0;
  std::size_t mm_outputs = 0;
  std::size_t mm_off = 0;
  for_each_mm_instance([&](const ProblemInstance& inst) {
    ++mm_outputs;
    mm_off += mm::solve_mm(inst).pairs.size() != std::max(inst.s_points.size(), inst.t_points.size());
  });
  for_each_olcmm_instance([&](const ProblemInstance& inst) {
    const std::size_t expected = std::max(inst.s_points.size(), inst.t_points.size());
    ++outputs;
    solver_off += olcmm::solve_olcmm(inst).pairs.size() != expected;
    oracle_off += oracle::oracle_olcmm(inst)->pairs.size() != expected;
  });

  // Smallest witness: every optimum uses more than max(|S|,|T|) pairs.
  const std::vector<RawPoint> s{{0, std::nullopt}, {2, std::nullopt}, {10, std::nullopt}};
  const std::vector<RawPoint> t{{1, std::nullopt}, {9, std::nullopt}, {11, std::nullopt}};
  const ProblemInstance witness = normalize(s, t);
  const auto by_count = cost_by_pair_count(witness);
  const Cost optimum = oracle::oracle_olcmm(witness)->total_cost;
  const Cost with_three = by_count.count(3) ? by_count.at(3) : kInfiniteCost;

  Verdict v;
  v.pass = solver_off == 0 && oracle_off == 0 && mm_off == 0;
  std::ostringstream d;
  d << "|pairs| == max(|S|,|T|) fails on " << solver_off << "/" << outputs
    << " olcmm outputs, " << mm_off << "/" << mm_outputs << " mm outputs and " << oracle_off << "/" << outputs
    << " oracle optima; witness S={0,2,10} T={1,9,11}: optimum " << cost_str(optimum)
    << " uses 4 pairs, best 3-pair covering costs " << cost_str(with_three);
  v.detail = d.str();
  return v;
}

Verdict non_crossing() {
  std::size_t outputs = 0;
  std::size_t bad = 0;
  std::string first_bad;
  const auto check = [&](const ProblemInstance& inst, const Matching& m) {
    ++outputs;
    const bool crossing = find_crossing(inst, m.pairs).has_value();
    const bool mixed_gap = !one_direction_per_gap(Partition(inst), m.pairs);
    if (crossing || mixed_gap) {
      ++bad;
      if (first_bad.empty()) first_bad = describe(inst);
    }
  };
  for_each_mm_instance([&](const ProblemInstance& inst) { check(inst, mm::solve_mm(inst)); });
  for_each_olcmm_instance(
      [&](const ProblemInstance& inst) { check(inst, olcmm::solve_olcmm(inst)); });
  Verdict v{bad == 0, std::to_string(outputs - bad) + "/" + std::to_string(outputs) +
                          " outputs have no crossing quadruple"};
  if (!first_bad.empty()) v.detail += "; first crossing in " + first_bad;
  return v;
}

Verdict mm_adjacency() {
  std::size_t outputs = 0;
  std::size_t bad = 0;
  std::string first_bad;
  for_each_mm_instance([&](const ProblemInstance& inst) {
    ++outputs;
    if (find_non_adjacent_pair(Partition(inst), mm::solve_mm(inst).pairs)) {
      ++bad;
      if (first_bad.empty()) first_bad = describe(inst);
    }
  });
  Verdict v{bad == 0, std::to_string(outputs - bad) + "/" + std::to_string(outputs) +
                          " mm outputs pair only adjacent blocks"};
  if (!first_bad.empty()) v.detail += "; first violation in " + first_bad;
  return v;
}

// --- scaling ------------------------------------------------------------------------

Verdict linearity() {
  constexpr double kLimit = 2.2;
  const std::vector<std::size_t> sizes{1000, 10000, 100000, 1000000};
  const std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  Verdict v;
  std::ostringstream d;
  d << "median ops(2n)/ops(n) over " << seeds.size() << " seeds:";
  for (Algorithm algo : {Algorithm::Mm, Algorithm::Olcmm}) {
    d << ' ' << algorithm_name(algo) << '[';
    for (std::size_t n : sizes) {
      std::vector<double> ratios;
      for (std::uint64_t seed : seeds) ratios.push_back(bench::measure_doubling(algo, n, seed).ratio);
      std::sort(ratios.begin(), ratios.end());
      const double median = ratios[ratios.size() / 2];
      if (median > kLimit) v.pass = false;
      d << (n == sizes.front() ? "" : " ") << n << ':' << median;
    }
    d << ']';
  }
  // Informative wall clock at n = 10^6.
  const ProblemInstance big = bench::bench_instance(1000000, 1);
  for (Algorithm algo : {Algorithm::Mm, Algorithm::Olcmm}) {
    d << "; " << algorithm_name(algo) << " n=1e6 " << run_solver(algo, big).elapsed_ms << " ms";
  }
  d << " (limit " << kLimit << ")";
  v.detail = d.str();
  return v;
}

Verdict ledger_bound() {
  std::size_t runs = 0;
  std::size_t over = 0;
  double worst = 0;
  const auto check = [&](const ProblemInstance& inst) {
    SolveStats stats;
    olcmm::solve_olcmm(inst, &stats);
    const double per_point = static_cast<double>(stats.ledger_entries) /
                             static_cast<double>(inst.size());
    worst = std::max(worst, per_point);
    over += stats.ledger_entries > 2 * inst.size();
    ++runs;
  };
  for_each_olcmm_instance(check);
  std::mt19937_64 rng(4004);
  for (std::size_t n : {1000u, 10000u, 100000u, 1000000u}) {
    for (Capacity cap_max : {Capacity{1}, Capacity{3}, Capacity{10}, static_cast<Capacity>(n)}) {
      GenParams params{n / 2, n - n / 2, cap_max, static_cast<Coord>(10 * n)};
      check(to_instance(generate_feasible(params, rng)));
    }
  }
  std::ostringstream d;
  d << runs - over << "/" << runs << " runs store <= 2n entries (worst " << worst
    << " per point)";
  return {over == 0, d.str()};
}

// --- worked examples -------------------------------------------------------------

Verdict micro_examples() {
  struct Example {
    const char* name;
    std::vector<RawPoint> s;
    std::vector<RawPoint> t;
    bool capacitated;
    Cost expected;
  };
  const std::vector<Example> examples{
      {"S={0,2} T={3,4,5}", {{0, {}}, {2, {}}}, {{3, {}}, {4, {}}, {5, {}}}, false, 8},
      {"S={0,5} T={1,2,3} uncapped", {{0, {}}, {5, {}}}, {{1, {}}, {2, {}}, {3, {}}}, false, 5},
      {"S={0,5} T={1,2,3} cap(0)=1", {{0, 1}, {5, {}}}, {{1, {}}, {2, {}}, {3, {}}}, true, 6},
  };
  Verdict v;
  std::ostringstream d;
  for (const Example& ex : examples) {
    const ProblemInstance inst = normalize(ex.s, ex.t);
    const auto brute = oracle::exhaustive(inst);
    const Cost fast_olcmm = olcmm::solve_olcmm(inst).total_cost;
    const bool brute_ok = brute && *brute == ex.expected;
    bool ok = brute_ok && fast_olcmm == ex.expected;
    if (!ex.capacitated) ok = ok && mm::solve_mm(inst).total_cost == ex.expected;
    v.pass = v.pass && ok;
    d << (d.tellp() > 0 ? "; " : "") << ex.name << ": exhaustive "
      << (brute ? cost_str(*brute) : "infeasible") << ", solver " << cost_str(fast_olcmm)
      << ", expected " << cost_str(ex.expected);
  }
  v.detail = d.str();
  return v;
}

// --- metric properties -------------------------------------------------------------

Verdict metric_properties() {
  constexpr int kRounds = 1000;
  std::mt19937_64 rng(5005);
  int translation = 0;
  int scaling = 0;
  int swap = 0;
  int monotone = 0;
  for (int i = 0; i < kRounds; ++i) {
    const ProblemInstance inst = to_instance(small_olcmm_instance(rng));
    const Cost base = olcmm::solve_olcmm(inst).total_cost;
    const Cost base_mm = mm::solve_mm(inst).total_cost;

    const Coord delta = std::uniform_int_distribution<Coord>(-1000000, 1000000)(rng);
    ProblemInstance moved = inst;
    for (Point& p : moved.s_points) p.coord += delta;
    for (Point& p : moved.t_points) p.coord += delta;
    translation += olcmm::solve_olcmm(moved).total_cost == base &&
                   mm::solve_mm(moved).total_cost == base_mm;

    const Coord k = std::uniform_int_distribution<Coord>(1, 1000)(rng);
    ProblemInstance big = inst;
    for (Point& p : big.s_points) p.coord *= k;
    for (Point& p : big.t_points) p.coord *= k;
    scaling += olcmm::solve_olcmm(big).total_cost == k * base &&
               mm::solve_mm(big).total_cost == k * base_mm;

    ProblemInstance other;
    other.s_points = inst.t_points;
    other.t_points = inst.s_points;
    for (Point& p : other.s_points) p.side = Side::S;
    for (Point& p : other.t_points) p.side = Side::T;
    swap += olcmm::solve_olcmm(other).total_cost == base &&
            mm::solve_mm(other).total_cost == base_mm;

    bool mono = oracle::oracle_olcmm(inst)->total_cost == base;
    for (Side side : {Side::S, Side::T}) {
      for (std::size_t j = 0; j < inst.points(side).size(); ++j) {
        ProblemInstance raised = inst;
        (side == Side::S ? raised.s_points : raised.t_points)[j].cap += 1;
        mono = mono && oracle::oracle_olcmm(raised)->total_cost <= base &&
               olcmm::solve_olcmm(raised).total_cost <= base;
      }
    }
    monotone += mono;
  }
  std::ostringstream d;
  d << "over " << kRounds << " instances: translation " << translation << ", scaling " << scaling
    << ", side swap " << swap << ", capacity monotonicity " << monotone;
  return {translation == kRounds && scaling == kRounds && swap == kRounds && monotone == kRounds,
          d.str()};
}

struct Criterion {
  const char* id;
  Verdict (*run)();
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"mm_oracle", mm_oracle},
      {"olcmm_oracle", olcmm_oracle},
      {"oracle_self_check", oracle_self_check},
      {"structure_degree_bounds", degree_bounds},
      {"structure_pair_count", pair_count},
      {"structure_non_crossing", non_crossing},
      {"structure_mm_adjacency", mm_adjacency},
      {"linearity", linearity},
      {"ledger_bound", ledger_bound},
      {"micro_examples", micro_examples},
      {"metric_properties", metric_properties},
  };
  return all;
}

}  // namespace
}  // namespace linematch

int main(int argc, char** argv) {
  using linematch::criteria;
  std::vector<const linematch::Criterion*> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--list") == 0) {
      for (const auto& c : criteria()) std::cout << c.id << '\n';
      return 0;
    }
    const auto it = std::find_if(criteria().begin(), criteria().end(),
                                 [&](const auto& c) { return std::strcmp(c.id, argv[i]) == 0; });
    if (it == criteria().end()) {
      std::cerr << "unknown criterion '" << argv[i] << "' (see --list)\n";
      return 2;
    }
    selected.push_back(&*it);
  }
  if (selected.empty()) {
    for (const auto& c : criteria()) selected.push_back(&c);
  }
  bool all_pass = true;
  for (const auto* c : selected) {
    const auto start = std::chrono::steady_clock::now();
    const linematch::Verdict v = c->run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << c->id << "  " << v.detail << "  ["
              << secs << " s]\n"
              << std::flush;
    all_pass = all_pass && v.pass;
  }
  return all_pass ? 0 : 1;
}
