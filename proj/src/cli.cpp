#include "linematch/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>

#include "linematch/bench.hpp"
#include "linematch/generate.hpp"
#include "linematch/instance.hpp"
#include "linematch/oracle.hpp"
#include "linematch/report.hpp"

namespace linematch::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LINEMATCH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

Cost oracle_cost(Algorithm algo, const ProblemInstance& inst) {
  if (algo == Algorithm::Mm) return oracle::oracle_mm(inst).total_cost;
  const auto m = oracle::oracle_olcmm(inst);
  if (!m) throw InfeasibleError("no circulation meets the degree bounds");
  return m->total_cost;
}

int cmd_solve(const std::string& path, Algorithm algo, bool timing, std::ostream& out) {
  const ProblemInstance inst = to_instance(read_instance_file(path));
  const SolveResult run = run_solver(algo, inst);
  write_report(out,
               make_report(std::string(algorithm_name(algo)), inst, run.matching, run.elapsed_ms,
                           run.examined),
               timing);
  return kOk;
}

// One comparison line; returns true on PASS.
bool verify_one(const std::string& label, Algorithm algo, const ProblemInstance& inst,
                const Hooks& hooks, std::ostream& out) {
  const Cost got = hooks.solve(algo, inst).total_cost;
  const Cost want = oracle_cost(algo, inst);
  if (got == want) {
    out << "PASS\t" << label << '\t' << to_string(got) << '\n';
    return true;
  }
  out << "FAIL\t" << label << "\tsolver=" << to_string(got) << "\toracle=" << to_string(want)
      << '\n';
  return false;
}

int cmd_verify(const std::string& path, const std::vector<std::uint64_t>& random, Algorithm algo,
               const Hooks& hooks, std::ostream& out) {
  std::size_t passed = 0;
  std::size_t total = 0;
  if (!random.empty()) {
    const std::uint64_t count = random[0];
    std::mt19937_64 rng(random.size() > 1 ? random[1] : default_seed());
    for (std::uint64_t i = 0; i < count; ++i) {
      const InstanceText text =
          algo == Algorithm::Mm ? small_mm_instance(rng) : small_olcmm_instance(rng);
      passed += verify_one(std::to_string(i), algo, to_instance(text), hooks, out);
      ++total;
    }
  } else {
    passed += verify_one(path, algo, to_instance(read_instance_file(path)), hooks, out);
    ++total;
  }
  out << passed << '/' << total << " PASS\n";
  return passed == total ? kOk : kVerifyFailed;
}

int cmd_gen(const std::vector<std::int64_t>& args, std::ostream& out, std::ostream& err) {
  for (std::int64_t v : args) {
    if (v < 1) {
      err << "gen: every argument must be at least 1\n";
      return kInputError;
    }
  }
  GenParams params;
  params.n_s = static_cast<std::size_t>(args[0]);
  params.n_t = static_cast<std::size_t>(args[1]);
  params.cap_max = args[2];
  params.coord_max = args[3];
  write_instance(out, generate(params, static_cast<std::uint64_t>(args[4])));
  return kOk;
}

int cmd_bench(const std::string& sizes, std::size_t reps, std::optional<std::uint64_t> seed,
              const std::string& csv_path, std::ostream& out, std::ostream& err) {
  bench::BenchConfig config;
  try {
    config.sizes = bench::parse_sizes(sizes);
  } catch (const std::invalid_argument& e) {
    err << "bench: " << e.what() << '\n';
    return kInputError;
  }
  config.reps = reps;
  config.seed = seed.value_or(default_seed());
  const bench::ScalingResult result = bench::run_scaling(config);
  bench::write_csv(out, result.rows);
  for (const bench::Doubling& d : result.doublings) {
    out << "# doubling\t" << algorithm_name(d.algo) << '\t' << d.n << '\t' << d.ops_n << '\t'
        << d.ops_2n << '\t' << d.ratio << '\n';
  }
  if (!csv_path.empty()) {
    std::ofstream file(csv_path);
    if (!file) {
      err << "bench: cannot write " << csv_path << '\n';
      return kInputError;
    }
    bench::write_csv(file, result.rows);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const Hooks& hooks_in) {
  Hooks hooks = hooks_in;
  if (!hooks.solve) {
    hooks.solve = [](Algorithm algo, const ProblemInstance& inst) {
      return run_solver(algo, inst).matching;
    };
  }

  CLI::App app("Minimum-cost many-to-many matching on a line", "linematch");
  app.require_subcommand(1);
  const std::map<std::string, Algorithm> algos{
      {"mm", Algorithm::Mm}, {"olcmm", Algorithm::Olcmm}, {"oracle", Algorithm::Oracle}};
  const std::map<std::string, Algorithm> checked{{"mm", Algorithm::Mm},
                                                 {"olcmm", Algorithm::Olcmm}};

  std::string path;
  Algorithm algo = Algorithm::Olcmm;
  bool timing = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance file and print a TSV report");
  solve->add_option("file", path, "Instance file")->required();
  solve->add_option("--algo", algo, "mm, olcmm or oracle")
      ->transform(CLI::CheckedTransformer(algos, CLI::ignore_case));
  solve->add_flag("--timing", timing, "Add an elapsed_ms header line");

  std::vector<std::uint64_t> random;
  auto* verify = app.add_subcommand("verify", "Compare a solver with the flow oracle");
  auto* verify_file = verify->add_option("file", path, "Instance file");
  verify->add_option("--random", random, "N [SEED]: check N random small instances")
      ->expected(1, 2)
      ->excludes(verify_file);
  verify->add_option("--algo", algo, "mm or olcmm")
      ->transform(CLI::CheckedTransformer(checked, CLI::ignore_case));

  std::vector<std::int64_t> gen_args;
  auto* gen = app.add_subcommand("gen", "Print a random instance");
  gen->add_option("args", gen_args, "N_S N_T CAP_MAX COORD_MAX SEED")->required()->expected(5);

  std::string sizes = "1e3,1e4,1e5,1e6";
  std::size_t reps = 5;
  std::optional<std::uint64_t> seed;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Scaling run; CSV on stdout and optionally a file");
  bench->add_option("--sizes", sizes, "Comma-separated sizes")->capture_default_str();
  bench->add_option("--reps", reps, "Repetitions per size")->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Instance seed");
  bench->add_option("--csv", csv_path, "Also write the CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return cmd_solve(path, algo, timing, out);
    if (*verify) {
      if (path.empty() && random.empty()) {
        err << "verify: give a file or --random N [SEED]\n";
        return kInputError;
      }
      return cmd_verify(path, random, algo, hooks, out);
    }
    if (*gen) return cmd_gen(gen_args, out, err);
    return cmd_bench(sizes, reps, seed, csv_path, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace linematch::cli
