// Copyright 2026 The RASM Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "rasm/bench.h"
#include "rasm/errors.h"
#include "rasm/instance.h"
#include "rasm/risk.h"
#include "rasm/solver.h"
#include "rasm/verify.h"

namespace rasm::cli {

namespace {

int ThreadsFromEnv() {
  if (const char* env = std::getenv("RASM_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

struct GenArgs {
  GeneratorParams params;
  std::string out;
};

struct SolveArgs {
  std::string instance;
  double alpha = 0.05;
  int k = 3;
  std::string cuts = "new";
  std::string mode = "loop";
  double epsilon = 1e-6;
  double time_limit = std::numeric_limits<double>::infinity();
  int64_t iteration_limit = std::numeric_limits<int64_t>::max();
  std::string export_lp;
  std::string trace;
  int threads = 1;
};

struct VerifyArgs {
  VerifyOptions options;
  std::string fault = "none";
};

struct BenchArgs {
  BenchOptions options;
  std::string mode = "loop";
  std::string out;
};

int CmdGen(const GenArgs& args, std::ostream& out) {
  const CoverageInstance instance = GenerateInstance(args.params);
  SaveInstance(instance, args.out);
  out << "wrote " << args.out << " (n=" << instance.num_sets()
      << ", m=" << instance.num_items() << ")\n";
  return kExitOk;
}

int CmdSolve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const std::optional<std::vector<CutFamily>> families =
      ParseCutFamilies(args.cuts);
  if (!families) {
    err << "error: --cuts expects a comma list of lshaped, new, lifted\n";
    return kExitUsage;
  }
  const std::optional<SolveMode> mode = ParseSolveMode(args.mode);
  if (!mode) {
    err << "error: --mode expects loop or lazy\n";
    return kExitUsage;
  }
  const RascOracle oracle(LoadInstance(args.instance));
  SolveConfig config;
  config.risk = {args.alpha, args.epsilon};
  config.region = {args.k};
  config.cut_families = *families;
  config.mode = *mode;
  config.time_limit = args.time_limit;
  config.iteration_limit = args.iteration_limit;
  config.threads = args.threads;
  std::ofstream trace;
  if (!args.trace.empty()) {
    trace.open(args.trace);
    if (!trace) throw std::runtime_error("cannot open " + args.trace);
    trace << kTraceCsvHeader << '\n';
    config.trace = [&trace](const TraceRow& row) {
      trace << ToCsvLine(row) << '\n';
    };
  }
  const SolveResult result = SolveRasm(oracle, config);
  if (!args.export_lp.empty()) {
    ExportLp(result.pool, config.region, args.export_lp);
  }
  out << std::setprecision(12);
  out << "status: " << SolveStatusName(result.status) << '\n'
      << "objective: " << result.cvar_best << '\n'
      << "upper_bound: " << result.upper_bound << '\n'
      << "support: " << result.x_best.ToString() << '\n'
      << "cuts: " << CutFamiliesName(config.cut_families) << '\n'
      << "mode: " << SolveModeName(config.mode) << '\n'
      << "iterations: " << result.iterations << '\n'
      << "cuts_added: " << result.cuts_added << '\n'
      << "nodes: " << result.nodes_total << '\n'
      << "time_s: " << result.wall_time << '\n';
  return kExitOk;
}

int CmdVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const std::optional<Fault> fault = ParseFault(args.fault);
  if (!fault) {
    err << "error: unknown fault '" << args.fault << "'\n";
    return kExitUsage;
  }
  VerifyOptions options = args.options;
  options.fault = *fault;
  const VerifyReport report = RunVerification(options);
  out << "seed=" << options.seed << " instances=" << options.instances
      << " max_n=" << options.max_n << " max_m=" << options.max_m << '\n';
  PrintReport(report, out);
  if (!report.ok()) {
    for (const std::string& name : report.Violated()) {
      err << "violated property: " << name << '\n';
    }
    return kExitPropertyFailure;
  }
  return kExitOk;
}

int CmdBench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  const std::optional<SolveMode> mode = ParseSolveMode(args.mode);
  if (!mode) {
    err << "error: --mode expects loop or lazy\n";
    return kExitUsage;
  }
  BenchOptions options = args.options;
  options.mode = *mode;
  std::ofstream file;
  std::ostream* sink = &out;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) throw std::runtime_error("cannot open " + args.out);
    sink = &file;
  }
  WriteBenchCsvHeader(*sink);
  const std::vector<BenchRow> rows = RunBench(options, [&](const BenchRow& row) {
    *sink << ToCsvLine(row) << '\n';
    sink->flush();
  });
  const std::vector<std::string> issues = CheckBenchConsistency(rows);
  for (const std::string& issue : issues) err << "inconsistent: " << issue << '\n';
  return issues.empty() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Risk-averse submodular maximization solver"};
  app.require_subcommand(1);
  const int default_threads = ThreadsFromEnv();

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen.params.n, "Number of candidate sets")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", gen.params.m, "Number of items")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--prob-low", gen.params.prob_low,
                      "Lower end of the coverage probability range");
  gen_cmd->add_option("--prob-high", gen.params.prob_high,
                      "Upper end of the coverage probability range");
  gen_cmd->add_option("--seed", gen.params.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output instance file")->required();

  SolveArgs solve;
  solve.threads = default_threads;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("instance", solve.instance, "Instance file")
      ->required();
  solve_cmd->add_option("--alpha", solve.alpha, "Risk level in (0, 1]");
  solve_cmd->add_option("--k", solve.k, "Cardinality budget");
  solve_cmd->add_option("--cuts", solve.cuts,
                        "Comma list of lshaped, new, lifted");
  solve_cmd->add_option("--mode", solve.mode, "loop or lazy");
  solve_cmd->add_option("--epsilon", solve.epsilon, "Optimality tolerance");
  solve_cmd->add_option("--time-limit", solve.time_limit, "Seconds");
  solve_cmd->add_option("--iteration-limit", solve.iteration_limit,
                        "Maximum iterations");
  solve_cmd->add_option("--export-lp", solve.export_lp,
                        "Write the final master problem in LP format");
  solve_cmd->add_option("--trace", solve.trace,
                        "Write per-iteration bounds as CSV");
  solve_cmd->add_option("--threads", solve.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the brute-force property suite");
  verify_cmd->add_option("--seed", verify.options.seed, "Random seed");
  verify_cmd->add_option("--instances", verify.options.instances,
                         "Number of random instances")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", verify.options.max_n, "Largest n")
      ->check(CLI::Range(2, 10));
  verify_cmd->add_option("--max-m", verify.options.max_m, "Largest m")
      ->check(CLI::Range(1, 12));
  verify_cmd->add_option("--inject-fault", verify.fault,
                         "Harness self-test: shrink-new-cut or skew-cvar");

  BenchArgs bench;
  bench.options.threads = default_threads;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Run the benchmark grid and print CSV");
  bench_cmd->add_option("--scale", bench.options.scale,
                        "Multiplier on the graph sizes 50, 100, 150")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--time-limit", bench.options.time_limit,
                        "Per-cell time limit in seconds")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.options.seed, "Instance seed");
  bench_cmd->add_option("--epsilon", bench.options.epsilon,
                        "Optimality tolerance");
  bench_cmd->add_option("--mode", bench.mode, "loop or lazy");
  bench_cmd->add_option("--threads", bench.options.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--parallel-cells", bench.options.parallel_cells,
                      "Run independent cells concurrently");
  bench_cmd->add_option("--out", bench.out, "CSV file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return CmdGen(gen, out);
    if (*solve_cmd) return CmdSolve(solve, out, err);
    if (*verify_cmd) return CmdVerify(verify, out, err);
    if (*bench_cmd) return CmdBench(bench, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rasm::cli
