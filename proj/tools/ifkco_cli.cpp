// ifkco: command-line front end for the fair k-center with outliers solvers.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 infeasible or
// degenerate instance parameters.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "ifkco/instances.hpp"
#include "ifkco/json_io.hpp"
#include "ifkco/oracle.hpp"
#include "ifkco/radius.hpp"
#include "ifkco/solve.hpp"
#include "ifkco/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitInstance = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ifkco::ParseError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Individually fair k-center with outliers: solvers, oracle and sweeps"};
  app.require_subcommand(1);

  // gen
  ifkco::GenSpec gen_spec;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a uniform-square synthetic instance");
  gen->add_option("--n", gen_spec.n, "Number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--k", gen_spec.k, "Maximum number of centers")->required()->check(CLI::PositiveNumber);
  gen->add_option("--q", gen_spec.q, "Maximum number of outliers")->required();
  gen->add_option("--seed", gen_spec.seed, "PRNG seed")->capture_default_str();
  gen->add_option("--side", gen_spec.side, "Square side length")->capture_default_str();
  gen->add_option("-o,--output", gen_out, "Instance JSON path (default stdout)");

  // import
  std::string csv_path, import_out;
  std::size_t import_k = 1, import_q = 0;
  bool import_geo = false;
  auto* import = app.add_subcommand("import", "Build an instance from a point CSV");
  import->add_option("csv", csv_path, "CSV with x,y[,...] or lat,lon columns")->required();
  import->add_option("--k", import_k, "Maximum number of centers")->required();
  import->add_option("--q", import_q, "Maximum number of outliers")->required();
  import->add_flag("--geo", import_geo, "Project lat,lon columns to a plane (meters)");
  import->add_option("-o,--output", import_out, "Instance JSON path (default stdout)");

  // solve
  std::string instance_path, algo_name = "refined";
  std::size_t iterations = 10;
  bool show_time = false;
  auto* solve = app.add_subcommand("solve", "Run one algorithm and print the solution JSON");
  solve->add_option("instance", instance_path, "Instance JSON")->required();
  solve->add_option("--algo", algo_name, "naive | basic | refined | param-naive")
      ->check(CLI::IsMember({"naive", "basic", "refined", "param-naive", "param_naive"}))
      ->capture_default_str();
  solve->add_option("--l", iterations, "Bisection iterations for refined / param-naive")
      ->capture_default_str();
  solve->add_flag("--time", show_time, "Print wall time to stderr");

  // evaluate
  std::string solution_path;
  auto* evaluate = app.add_subcommand("evaluate", "Check a solution JSON against an instance");
  evaluate->add_option("instance", instance_path, "Instance JSON")->required();
  evaluate->add_option("solution", solution_path, "Solution JSON")->required();

  // sweep
  std::string betas_text = "1.0:2.0:0.05", sweep_out;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Outlier count and alpha across a beta grid (CSV)");
  sweep->add_option("instance", instance_path, "Instance JSON")->required();
  sweep->add_option("--betas", betas_text, "start:stop:step, inclusive")->capture_default_str();
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep->add_option("-o,--output", sweep_out, "CSV path (default stdout)");

  // compare
  std::size_t oracle_max = ifkco::kOracleDefaultMaxN;
  auto* compare = app.add_subcommand("compare", "alpha of every algorithm, with the exact optimum on small instances");
  compare->add_option("instance", instance_path, "Instance JSON")->required();
  compare->add_option("--l", iterations, "Bisection iterations")->capture_default_str();
  compare->add_option("--oracle-max-n", oracle_max, "Largest n solved exactly")->capture_default_str();

  // radii
  auto* radii_cmd = app.add_subcommand("radii", "Dump NR and NR_q per vertex (CSV)");
  radii_cmd->add_option("instance", instance_path, "Instance JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      ifkco::MetricInstance inst;
      try {
        inst = ifkco::generate(gen_spec);
      } catch (const ifkco::ParameterError& e) {
        throw UsageError(e.what());
      }
      write_text(gen_out, ifkco::instance_to_json(inst).dump(1) + "\n");
    } else if (*import) {
      auto inst = ifkco::load_csv(csv_path, import_k, import_q, import_geo);
      write_text(import_out, ifkco::instance_to_json(inst).dump(1) + "\n");
    } else if (*solve) {
      const auto algo = ifkco::parse_algorithm(algo_name);
      const auto inst = ifkco::load_instance(instance_path);
      const auto radii = ifkco::compute_radii(inst);
      const auto result = ifkco::solve(*algo, inst, radii, iterations);
      std::cout << ifkco::solution_to_json(result.solution, result.report).dump(2) << '\n';
      if (show_time) std::cerr << "elapsed_s " << result.report.elapsed.count() << '\n';
    } else if (*evaluate) {
      const auto inst = ifkco::load_instance(instance_path);
      const auto radii = ifkco::compute_radii(inst);
      const auto sol = ifkco::solution_from_json(ifkco::read_json_file(solution_path), inst.n());
      ifkco::AlphaEvaluation eval;
      try {
        eval = ifkco::evaluate_alpha_detailed(inst, radii, sol);
      } catch (const ifkco::ParameterError& e) {
        throw ifkco::ParseError(solution_path + ": " + e.what());
      }
      ifkco::Json out;
      out["alpha"] = ifkco::ratio_to_json(eval.alpha);
      out["feasible"] = ifkco::is_feasible(inst, sol);
      out["centers"] = sol.centers.size();
      out["outliers"] = sol.outliers.size();
      if (eval.zero_radius_ratio) out["zero_radius_ratio"] = true;
      std::cout << out.dump(2) << '\n';
    } else if (*sweep) {
      ifkco::BetaRange range;
      try {
        range = ifkco::parse_beta_range(betas_text);
      } catch (const ifkco::ParameterError& e) {
        throw UsageError(e.what());
      }
      const auto inst = ifkco::load_instance(instance_path);
      const auto radii = ifkco::compute_radii(inst);
      const auto curve = ifkco::run_sweep(inst, radii, range.values(), instance_path, threads);
      std::ostringstream csv;
      ifkco::write_sweep_csv(csv, curve);
      write_text(sweep_out, csv.str());
    } else if (*compare) {
      const auto inst = ifkco::load_instance(instance_path);
      const auto radii = ifkco::compute_radii(inst);
      const auto table = ifkco::compare_algorithms(inst, radii, {iterations, oracle_max});
      std::cout << table.dump(2) << '\n';
    } else if (*radii_cmd) {
      const auto inst = ifkco::load_instance(instance_path);
      const auto radii = ifkco::compute_radii(inst);
      std::cout.precision(std::numeric_limits<double>::max_digits10);
      std::cout << "vertex,nr,nrq\n";
      for (std::size_t i = 0; i < inst.n(); ++i)
        std::cout << i << ',' << radii.nr[i] << ',' << radii.nrq[i] << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ifkco::ParameterError& e) {
    std::cerr << "instance error: " << e.what() << '\n';
    return kExitInstance;
  } catch (const std::exception& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}
