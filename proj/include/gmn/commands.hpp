#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gmn {

/// Shared configuration of the batch subcommands. Every output lands inside
/// `out_dir`; input files are never modified.
struct RunConfig {
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  double tol = 1e-6;
  int restarts = 64;
  int threads = 0;
  std::string format = "json";  // "csv" additionally dumps tensors as CSV
};

/// optimize: constrained-family maximization (plus the general-qubit run
/// when `general`); writes optimize_result.json and optimize_summary.txt.
/// Returns 0 on convergence, 1 otherwise.
int cmd_optimize(int num_parties, bool general, const RunConfig& config);

/// certify: paradox report, LP membership certificates and the swap-isometry
/// certification for a state file measured at the given angles.
int cmd_certify(const std::string& state_file,
                const std::vector<double>& alphas,
                const std::vector<double>& phis, const RunConfig& config);

/// sweep: noise-relaxed maximization over the epsilon grid; writes sweep.csv
/// and sweep.json. `vector_norm_p_eps` selects the raw amplitude-difference
/// distance for the CSV column. Returns 0 when every point converged.
int cmd_sweep(const std::vector<double>& eps_grid, bool vector_norm_p_eps,
              const RunConfig& config);

/// tables: entanglement monotones with published reference values;
/// split is "1v2" (three parties) or "2v2" (four parties).
int cmd_tables(const std::string& split, double renyi_order,
               const RunConfig& config);

/// selftest: embeds the tripartite optimum with the given block weights,
/// measures block-diagonally at the optimal angles and certifies.
int cmd_selftest(const std::vector<double>& block_weights,
                 const RunConfig& config);

/// verify: no-signaling + residual + score report for a tensor file.
int cmd_verify(const std::string& tensor_file, const RunConfig& config);

}  // namespace gmn
