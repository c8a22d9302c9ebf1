#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "linematch/solver.hpp"
#include "linematch/types.hpp"

namespace linematch::bench {

struct BenchRow {
  std::size_t n = 0;
  Algorithm algo = Algorithm::Olcmm;
  double median_ms = 0;
  std::uint64_t ops = 0;
  std::uint64_t seed = 0;
};

/// ops(2n) / ops(n) for one algorithm, both instances drawn with the same seed.
struct Doubling {
  std::size_t n = 0;
  Algorithm algo = Algorithm::Olcmm;
  std::uint64_t ops_n = 0;
  std::uint64_t ops_2n = 0;
  double ratio = 0;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t reps = 5;
  std::uint64_t seed = 1;
  std::vector<Algorithm> algos{Algorithm::Mm, Algorithm::Olcmm, Algorithm::Oracle};
  std::size_t oracle_max_n = 1000;  // the flow network has |S|·|T| arcs
};

struct ScalingResult {
  std::vector<BenchRow> rows;
  std::vector<Doubling> doublings;  // Mm and Olcmm only
};

/// n/2 S points and n - n/2 T points, coordinates uniform in [0, 10n), caps
/// uniform in [1, 3], redrawn until feasible.
ProblemInstance bench_instance(std::size_t n, std::uint64_t seed);

/// Operation count of one solve; deterministic.
std::uint64_t count_ops(Algorithm algo, std::size_t n, std::uint64_t seed);

Doubling measure_doubling(Algorithm algo, std::size_t n, std::uint64_t seed);

/// One row per (size, algorithm), oracle rows only up to oracle_max_n. Each
/// row times `reps` solves of the same instance and keeps the median.
ScalingResult run_scaling(const BenchConfig& config);

/// Header `n,algo,median_ms,ops,seed`, one line per row.
void write_csv(std::ostream& out, std::span<const BenchRow> rows);

/// "1e3,1e4,2500" -> {1000, 10000, 2500}. Throws std::invalid_argument on a
/// malformed entry or one below 2.
std::vector<std::size_t> parse_sizes(const std::string& list);

}  // namespace linematch::bench
