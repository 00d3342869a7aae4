// Command-line front end: solve / verify / gen / bench over flat instance
// files. Exit codes: 0 ok, 2 input or parameter error, 3 solver error,
// 4 guarantee violated (verify), 5 oracle budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ukp/errors.hpp"
#include "ukp/generator.hpp"
#include "ukp/instance_io.hpp"
#include "ukp/oracle.hpp"
#include "ukp/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;
constexpr int kExitGuarantee = 4;
constexpr int kExitOracleBudget = 5;

ukp::Rational parse_rational_flag(const std::string& text, const char* what) {
  auto value = ukp::Rational::parse(text);
  if (!value) {
    throw ukp::InvalidParameterError(std::string("malformed ") + what + " '" + text + "'");
  }
  return *value;
}

ukp::Rational parse_eps_flag(const std::string& text) {
  auto eps = parse_rational_flag(text, "epsilon");
  if (eps.is_zero() || eps >= ukp::Rational(1)) {
    throw ukp::InvalidParameterError("epsilon must lie in (0, 1), got " + eps.str());
  }
  return eps;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

void print_machine(std::ostream& os, const ukp::SolveResult& result) {
  os << "profit " << result.profit << "\n";
  os << "size " << result.solution.total_size() << "\n";
  os << "branch " << to_string(result.mode) << "\n";
  for (const auto& [index, count] : result.solution.counts()) {
    os << "take " << index << " " << count << "\n";
  }
  os << "counter tuples " << result.stats.tuples_created << "\n";
  os << "counter glue_ops " << result.stats.glue_ops << "\n";
  os << "counter slots " << result.stats.reduction_slots << "\n";
  os << "counter dominance_removals " << result.stats.dominance_removals << "\n";
}

void print_text(std::ostream& os, const ukp::SolveResult& result) {
  os << "profit  " << result.profit.pretty() << "  (~" << result.profit.to_double() << ")\n";
  os << "size    " << result.solution.total_size().pretty() << "\n";
  os << "branch  " << to_string(result.mode) << "\n";
  for (const auto& [index, count] : result.solution.counts()) {
    os << "take    item " << index << "  x " << count << "\n";
  }
  os << "counters  tuples=" << result.stats.tuples_created
     << " glue_ops=" << result.stats.glue_ops << " slots=" << result.stats.reduction_slots
     << " dominance_removals=" << result.stats.dominance_removals << "\n";
}

int run_solve(const std::string& input, const std::string& eps_text, const std::string& emit) {
  const ukp::Rational eps = parse_eps_flag(eps_text);
  const ukp::LoadedInstance loaded = ukp::load_instance_file(input);
  if (loaded.dropped_oversized > 0) {
    std::cerr << "warning: dropped " << loaded.dropped_oversized << " oversized item(s)\n";
  }
  const ukp::SolveResult result = ukp::solve(loaded.instance, eps);
  if (emit == "machine") {
    print_machine(std::cout, result);
  } else {
    print_text(std::cout, result);
  }
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& eps_text, const std::string& oracle,
               std::int64_t oracle_budget, bool tamper) {
  const ukp::Rational eps_input = parse_eps_flag(eps_text);
  const ukp::LoadedInstance loaded = ukp::load_instance_file(input);
  if (loaded.dropped_oversized > 0) {
    std::cerr << "warning: dropped " << loaded.dropped_oversized << " oversized item(s)\n";
  }

  ukp::SolveResult result = ukp::solve(loaded.instance, eps_input);
  if (tamper) {
    // Test hook: corrupt the reported profit so the certificate check trips.
    result.profit += ukp::Rational(1, 1000);
  }

  ukp::Rational opt;
  if (oracle == "dp") {
    opt = ukp::exact_dp(ukp::to_grid(loaded.instance, oracle_budget), oracle_budget).opt;
  } else {
    ukp::Rational min_size = loaded.instance.items()[0].size;
    for (const ukp::Item& item : loaded.instance.items()) {
      min_size = std::min(min_size, item.size);
    }
    const ukp::Integer max_copies = ukp::Rational(1).floor_div(min_size);
    if (!max_copies.fits_slong_p()) {
      throw ukp::OracleBudgetError("brute-force copy bound overflows");
    }
    opt = ukp::brute_force(loaded.instance, max_copies.get_si());
  }

  // The enforced guarantee uses the normalized epsilon, which is never
  // larger than the requested one.
  const ukp::EpsParams params =
      ukp::normalize_epsilon(eps_input, ukp::greedy_p0(loaded.instance).p0);
  const ukp::Rational bound = (ukp::Rational(1) - params.eps) * opt;

  const bool certificate_ok = result.profit == result.solution.total_profit() &&
                              result.solution.consistent_with(loaded.instance);
  const bool guarantee_ok = result.profit >= bound;

  std::cout << "profit " << result.profit << "\n";
  std::cout << "opt " << opt << "\n";
  std::cout << "ratio " << (opt.is_zero() ? ukp::Rational(1) : result.profit / opt) << "\n";
  std::cout << "eps " << params.eps << "\n";
  if (!certificate_ok) {
    std::cerr << "verify: certificate totals do not match the reported profit\n";
    return kExitGuarantee;
  }
  if (!guarantee_ok) {
    std::cerr << "verify: profit below (1-eps) * OPT\n";
    return kExitGuarantee;
  }
  std::cout << "verified\n";
  return kExitOk;
}

int run_gen(std::size_t n, std::int64_t grid, std::uint64_t seed, const std::string& profile_name,
            const std::string& output) {
  const auto profile = ukp::profile_from_string(profile_name);
  if (!profile) {
    throw ukp::InvalidParameterError("unknown profile '" + profile_name + "'");
  }
  const ukp::Instance instance = ukp::generate_instance(n, grid, seed, *profile);
  const std::string text = ukp::render_instance(instance);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw ukp::Error("cannot write '" + output + "'");
    out << text;
  }
  return kExitOk;
}

int run_bench(const std::string& eps_list, const std::string& sizes, const std::string& seeds,
              std::int64_t grid, const std::string& profile_name, const std::string& csv_path,
              bool with_opt) {
  const auto profile = ukp::profile_from_string(profile_name);
  if (!profile) {
    throw ukp::InvalidParameterError("unknown profile '" + profile_name + "'");
  }
  std::vector<ukp::Rational> eps_values;
  for (const auto& text : split_list(eps_list)) eps_values.push_back(parse_eps_flag(text));
  std::vector<std::size_t> n_values;
  for (const auto& text : split_list(sizes)) n_values.push_back(std::stoull(text));
  std::vector<std::uint64_t> seed_values;
  for (const auto& text : split_list(seeds)) seed_values.push_back(std::stoull(text));
  if (eps_values.empty() || n_values.empty() || seed_values.empty()) {
    throw ukp::InvalidParameterError("bench needs nonempty eps, size and seed lists");
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!csv_path.empty()) {
    file.open(csv_path, std::ios::binary);
    if (!file) throw ukp::Error("cannot write '" + csv_path + "'");
    out = &file;
  }
  *out << "id,n,D,eps,profit,opt,ratio,wall_ns,tuples,glue_ops,slots,dominance_removals\n";

  // Records appear in deterministic (id, eps) order.
  for (const std::size_t n : n_values) {
    for (const std::uint64_t seed : seed_values) {
      const ukp::Instance instance = ukp::generate_instance(n, grid, seed, *profile);
      const std::string id = std::string(to_string(*profile)) + "-n" + std::to_string(n) +
                             "-s" + std::to_string(seed);
      std::optional<ukp::Rational> opt;
      if (with_opt) {
        try {
          opt = ukp::exact_dp(ukp::to_grid(instance)).opt;
        } catch (const ukp::OracleBudgetError&) {
          // Leave the opt/ratio columns empty; the record is still useful.
        }
      }
      for (const ukp::Rational& eps : eps_values) {
        const auto start = std::chrono::steady_clock::now();
        const ukp::SolveResult result = ukp::solve(instance, eps);
        const auto wall = std::chrono::duration_cast<std::chrono::nanoseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        *out << id << "," << n << "," << grid << "," << eps << "," << result.profit << ",";
        if (opt) {
          *out << *opt << "," << (result.profit / *opt);
        } else {
          *out << ",";
        }
        *out << "," << wall << "," << result.stats.tuples_created << ","
             << result.stats.glue_ops << "," << result.stats.reduction_slots << ","
             << result.stats.dominance_removals << "\n";
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FPTAS solver for the unbounded knapsack problem"};
  app.require_subcommand(1);

  std::string input, eps_text, emit = "text";
  auto* solve_cmd = app.add_subcommand("solve", "Approximately solve an instance file");
  solve_cmd->add_option("--input", input, "Instance file")->required();
  solve_cmd->add_option("--eps", eps_text, "Accuracy parameter in (0,1)")->required();
  solve_cmd->add_option("--emit", emit, "Output format: text|machine")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string oracle = "dp";
  std::int64_t oracle_budget = ukp::kDefaultOracleBudget;
  bool tamper = false;
  auto* verify_cmd = app.add_subcommand("verify", "Solve and check against an exact oracle");
  verify_cmd->add_option("--input", input, "Instance file")->required();
  verify_cmd->add_option("--eps", eps_text, "Accuracy parameter in (0,1)")->required();
  verify_cmd->add_option("--oracle", oracle, "Oracle: dp|brute")
      ->check(CLI::IsMember({"dp", "brute"}));
  verify_cmd->add_option("--oracle-budget", oracle_budget, "Max oracle table cells");
  verify_cmd->add_flag("--tamper", tamper, "Corrupt the result before checking (test hook)")
      ->group("");  // hidden

  std::size_t gen_n = 10;
  std::int64_t gen_grid = 64;
  std::uint64_t gen_seed = 0;
  std::string gen_profile = "uniform", gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a reproducible random instance");
  gen_cmd->add_option("--n", gen_n, "Number of items")->required();
  gen_cmd->add_option("--grid", gen_grid, "Size grid denominator D (sizes are u/D)");
  gen_cmd->add_option("--seed", gen_seed, "Seed");
  gen_cmd->add_option("--profile", gen_profile, "uniform|correlated|small-heavy");
  gen_cmd->add_option("--output", gen_output, "Output path (stdout when omitted)");

  std::string eps_list = "1/4,1/8,1/16", sizes = "10,20,40", seeds = "1,2,3";
  std::int64_t bench_grid = 64;
  std::string bench_profile = "uniform", csv_path;
  bool no_opt = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run a solve grid and emit CSV records");
  bench_cmd->add_option("--eps-list", eps_list, "Comma-separated epsilon values");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated instance sizes n");
  bench_cmd->add_option("--seeds", seeds, "Comma-separated seeds");
  bench_cmd->add_option("--grid", bench_grid, "Size grid denominator D");
  bench_cmd->add_option("--profile", bench_profile, "uniform|correlated|small-heavy");
  bench_cmd->add_option("--csv", csv_path, "CSV output path (stdout when omitted)");
  bench_cmd->add_flag("--no-opt", no_opt, "Skip the exact-oracle OPT column");

  try {
    app.parse(argc, argv);
    if (solve_cmd->parsed()) return run_solve(input, eps_text, emit);
    if (verify_cmd->parsed()) return run_verify(input, eps_text, oracle, oracle_budget, tamper);
    if (gen_cmd->parsed()) return run_gen(gen_n, gen_grid, gen_seed, gen_profile, gen_output);
    if (bench_cmd->parsed())
      return run_bench(eps_list, sizes, seeds, bench_grid, bench_profile, csv_path, !no_opt);
    return kExitInput;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const ukp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ukp::InvalidParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ukp::EmptyInstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ukp::OracleBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracleBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}
