// gmn — batch front-end for the multipartite paradox toolkit.
//
// Subcommands: optimize, certify, sweep, tables, selftest, verify.
// All outputs are written under --out; exit code 0 on success, 1 on
// non-convergence, 2 on usage or input errors.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <numbers>
#include <string>
#include <vector>

#include "gmn/commands.hpp"

namespace {

void add_common(CLI::App* cmd, gmn::RunConfig& config) {
  cmd->add_option("--out", config.out_dir, "Output directory");
  cmd->add_option("--seed", config.seed, "RNG seed");
  cmd->add_option("--tol", config.tol, "Certification / LP tolerance");
  cmd->add_option("--restarts", config.restarts, "Optimizer restarts");
  cmd->add_option("--threads", config.threads,
                  "Worker threads (0 = GMN_THREADS or hardware)");
  cmd->add_option("--format", config.format, "json or csv (extra dumps)")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipartite paradox toolkit"};
  app.require_subcommand(1);

  gmn::RunConfig config;

  // optimize
  int opt_n = 3;
  bool opt_general = false;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Maximize the score over the constrained family");
  optimize->add_option("--n", opt_n, "Number of parties (>= 3)");
  optimize->add_flag("--general", opt_general,
                     "Also run the general-qubit maximization (N = 3)");
  add_common(optimize, config);

  // certify
  std::string certify_state;
  std::vector<double> certify_alphas, certify_phis;
  CLI::App* certify = app.add_subcommand(
      "certify", "Paradox + LP + self-test certification of a state file");
  certify->add_option("state", certify_state, "State JSON file")->required();
  certify->add_option("--alpha", certify_alphas,
                      "Setting-1 polar angles, one per party (default pi/2)");
  certify->add_option("--phi", certify_phis,
                      "Setting-1 phases, one per party (default 0)");
  add_common(certify, config);

  // sweep
  double sweep_max = 0.12, sweep_step = 0.005;
  std::vector<double> sweep_grid;
  bool sweep_vector_norm = false;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Noise-relaxed maximization over an epsilon grid");
  sweep->add_option("--max-eps", sweep_max, "Grid upper end (< 1/3)");
  sweep->add_option("--step", sweep_step, "Grid step");
  sweep->add_option("--grid", sweep_grid, "Explicit ascending epsilon list");
  sweep->add_flag("--p-eps-vector", sweep_vector_norm,
                  "CSV p_eps column uses the raw amplitude 1-norm distance");
  add_common(sweep, config);

  // tables
  std::string tables_split = "1v2";
  double tables_order = 0.5;
  CLI::App* tables = app.add_subcommand(
      "tables", "Entanglement monotone tables with reference deltas");
  tables->add_option("--split", tables_split, "1v2 or 2v2");
  tables->add_option("--order", tables_order, "Renyi order (default 1/2)");
  add_common(tables, config);

  // selftest
  std::vector<double> selftest_weights{1.0};
  CLI::App* selftest = app.add_subcommand(
      "selftest", "Block-embed the tripartite optimum and certify extraction");
  selftest->add_option("--weights", selftest_weights,
                       "Block weights (nonnegative, sum 1)");
  add_common(selftest, config);

  // verify
  std::string verify_tensor;
  CLI::App* verify = app.add_subcommand(
      "verify", "No-signaling + residual check of a tensor file");
  verify->add_option("tensor", verify_tensor, "Tensor JSON file")->required();
  add_common(verify, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (optimize->parsed()) return gmn::cmd_optimize(opt_n, opt_general, config);
    if (certify->parsed())
      return gmn::cmd_certify(certify_state, certify_alphas, certify_phis,
                              config);
    if (sweep->parsed()) {
      if (sweep_grid.empty()) {
        if (sweep_step <= 0.0)
          throw std::invalid_argument("sweep: --step must be positive");
        for (double e = 0.0; e <= sweep_max + 1e-12; e += sweep_step)
          sweep_grid.push_back(e);
      }
      return gmn::cmd_sweep(sweep_grid, sweep_vector_norm, config);
    }
    if (tables->parsed())
      return gmn::cmd_tables(tables_split, tables_order, config);
    if (selftest->parsed())
      return gmn::cmd_selftest(selftest_weights, config);
    if (verify->parsed()) return gmn::cmd_verify(verify_tensor, config);
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "input parse error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
