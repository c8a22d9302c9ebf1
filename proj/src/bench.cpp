#include "linematch/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "linematch/generate.hpp"

namespace linematch::bench {

ProblemInstance bench_instance(std::size_t n, std::uint64_t seed) {
  GenParams params;
  params.n_s = n / 2;
  params.n_t = n - n / 2;
  params.cap_max = 3;
  params.coord_max = static_cast<Coord>(10 * n);
  std::mt19937_64 rng(seed);
  return to_instance(generate_feasible(params, rng));
}

std::uint64_t count_ops(Algorithm algo, std::size_t n, std::uint64_t seed) {
  return run_solver(algo, bench_instance(n, seed)).examined;
}

Doubling measure_doubling(Algorithm algo, std::size_t n, std::uint64_t seed) {
  Doubling d;
  d.n = n;
  d.algo = algo;
  d.ops_n = count_ops(algo, n, seed);
  d.ops_2n = count_ops(algo, 2 * n, seed);
  d.ratio = static_cast<double>(d.ops_2n) / static_cast<double>(d.ops_n);
  return d;
}

ScalingResult run_scaling(const BenchConfig& config) {
  ScalingResult result;
  for (std::size_t n : config.sizes) {
    const ProblemInstance inst = bench_instance(n, config.seed);
    for (Algorithm algo : config.algos) {
      if (algo == Algorithm::Oracle && n > config.oracle_max_n) continue;
      std::vector<double> times;
      BenchRow row{n, algo, 0, 0, config.seed};
      for (std::size_t r = 0; r < std::max<std::size_t>(config.reps, 1); ++r) {
        const SolveResult run = run_solver(algo, inst);
        times.push_back(run.elapsed_ms);
        row.ops = run.examined;
      }
      std::sort(times.begin(), times.end());
      row.median_ms = times[times.size() / 2];
      result.rows.push_back(row);
      if (algo != Algorithm::Oracle) {
        result.doublings.push_back(measure_doubling(algo, n, config.seed));
      }
    }
  }
  return result;
}

void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "n,algo,median_ms,ops,seed\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << algorithm_name(r.algo) << ',' << r.median_ms << ',' << r.ops << ','
        << r.seed << '\n';
  }
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> sizes;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad size '" + item + "'");
    }
    if (used != item.size() || !(value >= 2) || value != std::floor(value) || value > 1e12) {
      throw std::invalid_argument("bad size '" + item + "'");
    }
    sizes.push_back(static_cast<std::size_t>(value));
  }
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  return sizes;
}

}  // namespace linematch::bench
