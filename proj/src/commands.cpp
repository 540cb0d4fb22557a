#include "gmn/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gmn/entanglement.hpp"
#include "gmn/io.hpp"
#include "gmn/optimize.hpp"
#include "gmn/paradox.hpp"
#include "gmn/selftest.hpp"

namespace gmn {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path output_path(const RunConfig& config, const std::string& name) {
  if (name.find('/') != std::string::npos || name.find("..") != std::string::npos)
    throw std::invalid_argument("output file names must be plain");
  fs::create_directories(config.out_dir);
  return fs::path(config.out_dir) / name;
}

void write_text(const RunConfig& config, const std::string& name,
                const std::string& contents) {
  std::ofstream os(output_path(config, name), std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + name);
  os << contents;
}

void write_json(const RunConfig& config, const std::string& name,
                const json& j) {
  write_text(config, name, j.dump(2) + "\n");
}

json load_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open input file: " + path);
  return json::parse(is);
}

BlockState block_state_from(const StateVector& state) {
  if (state.local_dims.empty())
    throw std::invalid_argument("certify: empty state");
  const int local = state.local_dims.front();
  for (int d : state.local_dims)
    if (d != local || d % 2 != 0)
      throw std::invalid_argument(
          "certify: local dimensions must be equal and even");
  BlockState chi;
  chi.num_parties = state.num_parties;
  chi.num_blocks = local / 2;
  chi.amplitudes = state.amplitudes;
  return chi;
}

struct PublishedColumn {
  const char* state;
  double values[5];  // concurrence, negativity, log-neg, entropy, Renyi
};

// Published two-decimal reference values for the monotone tables.
constexpr PublishedColumn kPublished1v2[3] = {
    {"GHZ3", {1.00, 0.50, 1.00, 1.00, 1.00}},
    {"W3", {0.94, 0.47, 0.96, 0.92, 0.96}},
    {"PSI_STAR_3", {0.56, 0.28, 0.64, 0.42, 0.64}},
};
constexpr PublishedColumn kPublished2v2[3] = {
    {"GHZ4", {1.00, 0.50, 1.00, 1.00, 1.00}},
    {"W4", {1.00, 0.43, 0.89, 1.00, 1.00}},
    {"PSI_STAR_4", {0.39, 0.17, 0.43, 0.24, 0.48}},
};

}  // namespace

int cmd_optimize(int num_parties, bool general, const RunConfig& config) {
  if (num_parties < 3)
    throw std::invalid_argument("optimize: --n must be at least 3");

  MaximizeOptions opts;
  opts.restarts = config.restarts;
  opts.seed = config.seed;
  opts.threads = config.threads;

  const OptimizationResult constrained = maximize_constrained(num_parties, opts);
  json result = io::to_json(constrained);

  char line[256];
  std::string summary;
  std::snprintf(line, sizeof line, "S%d = %.6f\n", num_parties,
                constrained.best_score);
  summary += line;
  std::snprintf(line, sizeof line, "a = %.7f\n", constrained.family->a);
  summary += line;
  for (int i = 0; i < num_parties; ++i) {
    std::snprintf(line, sizeof line, "alpha_%d = %.7f\n", i + 1,
                  constrained.family->alphas(i));
    summary += line;
  }
  std::snprintf(line, sizeof line, "residual_max = %.3e\n",
                constrained.residual_max);
  summary += line;

  bool converged = constrained.converged;
  if (general) {
    const OptimizationResult gen = maximize_general_qubit(num_parties, opts);
    result = json{{"constrained", std::move(result)},
                  {"general", io::to_json(gen)}};
    std::snprintf(line, sizeof line, "S%d_general = %.6f\n", num_parties,
                  gen.best_score);
    summary += line;
    std::snprintf(line, sizeof line, "agreement = %.3e\n",
                  std::abs(gen.best_score - constrained.best_score));
    summary += line;
    converged = converged && gen.converged;
  }

  write_json(config, "optimize_result.json", result);
  write_text(config, "optimize_summary.txt", summary);
  std::fputs(summary.c_str(), stdout);
  return converged ? 0 : 1;
}

int cmd_certify(const std::string& state_file,
                const std::vector<double>& alphas,
                const std::vector<double>& phis, const RunConfig& config) {
  const StateVector state = io::state_from_json(load_json_file(state_file));
  const int n = state.num_parties;
  std::vector<double> all_alphas = alphas;
  if (all_alphas.empty())
    all_alphas.assign(n, std::numbers::pi / 2.0);
  if (static_cast<int>(all_alphas.size()) != n)
    throw std::invalid_argument("certify: need one alpha per party");
  if (!phis.empty() && static_cast<int>(phis.size()) != n)
    throw std::invalid_argument("certify: need one phi per party (or none)");

  std::vector<MeasurementBasis> bases;
  for (int i = 0; i < n; ++i)
    bases.push_back(
        build_measurement_basis(all_alphas[i], phis.empty() ? 0.0 : phis[i]));

  const BlockState chi = block_state_from(state);
  const CorrelationTensor tensor = block_correlation_tensor(chi, bases);

  const ParadoxReport paradox = score(tensor);
  const NoSignalingReport ns = check_no_signaling(tensor);
  const LPCertificate local = membership_local(tensor, config.tol);

  json report{{"format", io::kFormatTag},
              {"type", "certify_report"},
              {"paradox", io::to_json(paradox)},
              {"no_signaling", io::to_json(ns)},
              {"local_certificate", io::to_json(local)}};

  if (n == 3) {
    const LPCertificate hybrid = membership_hybrid(tensor, config.tol);
    report["hybrid_certificate"] = io::to_json(hybrid);
    report["genuine"] = !local.feasible && !hybrid.feasible;
  }
  if (n == 3 || n == 4)
    report["certification"] = io::to_json(certify(tensor, chi, config.tol));

  write_json(config, "certify_report.json", report);
  if (config.format == "csv") {
    std::ostringstream os;
    io::write_tensor_csv(os, tensor);
    write_text(config, "certify_tensor.csv", os.str());
  }
  return 0;
}

int cmd_sweep(const std::vector<double>& eps_grid, bool vector_norm_p_eps,
              const RunConfig& config) {
  if (eps_grid.empty())
    throw std::invalid_argument("sweep: empty epsilon grid");
  for (double e : eps_grid)
    if (e < 0.0 || e >= 1.0 / 3.0)
      throw std::invalid_argument("sweep: epsilon must lie in [0, 1/3)");

  SweepOptions opts;
  opts.seed = config.seed;
  opts.restarts = config.restarts;
  opts.threads = config.threads;
  const std::vector<SweepRecord> records = noise_sweep(eps_grid, opts);

  std::ostringstream csv;
  io::write_sweep_csv(csv, records, vector_norm_p_eps);
  write_text(config, "sweep.csv", csv.str());

  json arr = json::array();
  bool all_converged = true;
  for (const SweepRecord& r : records) {
    arr.push_back(io::to_json(r));
    all_converged = all_converged && r.converged;
  }
  write_json(config, "sweep.json",
             json{{"format", io::kFormatTag},
                  {"type", "sweep"},
                  {"seed", config.seed},
                  {"records", std::move(arr)}});
  return all_converged ? 0 : 1;
}

int cmd_tables(const std::string& split, double renyi_order,
               const RunConfig& config) {
  Bipartition bip;
  std::vector<std::pair<std::string, StateVector>> states;
  const PublishedColumn* published = nullptr;
  if (split == "1v2") {
    bip.side_a = {0};
    published = kPublished1v2;
    for (NamedState s :
         {NamedState::GHZ3, NamedState::W3, NamedState::PSI_STAR_3})
      states.emplace_back(to_string(s), build_named_state(s));
  } else if (split == "2v2") {
    bip.side_a = {0, 1};
    published = kPublished2v2;
    for (NamedState s :
         {NamedState::GHZ4, NamedState::W4, NamedState::PSI_STAR_4})
      states.emplace_back(to_string(s), build_named_state(s));
  } else {
    throw std::invalid_argument("tables: --split must be 1v2 or 2v2");
  }

  const std::vector<MonotoneRow> rows =
      monotone_table(states, bip, renyi_order);

  std::vector<io::TableColumn> columns;
  for (size_t i = 0; i < rows.size(); ++i) {
    io::TableColumn col;
    col.computed = rows[i];
    col.paper_values.assign(published[i].values, published[i].values + 5);
    columns.push_back(std::move(col));
  }
  std::ostringstream os;
  io::write_tables_csv(os, columns);
  write_text(config, "tables.csv", os.str());
  return 0;
}

int cmd_selftest(const std::vector<double>& block_weights,
                 const RunConfig& config) {
  if (block_weights.empty())
    throw std::invalid_argument("selftest: need at least one block weight");
  Eigen::VectorXd w(block_weights.size());
  for (size_t i = 0; i < block_weights.size(); ++i) w(i) = block_weights[i];

  const StateVector ideal = build_named_state(NamedState::PSI_STAR_3);
  const BlockState chi = embed_blocks(w, ideal);
  std::vector<MeasurementBasis> bases(
      3, build_measurement_basis(std::numbers::pi / 2.0, 0.0));
  const CorrelationTensor tensor = block_correlation_tensor(chi, bases);
  const CertificationReport report = certify(tensor, chi, config.tol);

  write_json(config, "selftest_report.json", io::to_json(report));
  return report.pass ? 0 : 1;
}

int cmd_verify(const std::string& tensor_file, const RunConfig& config) {
  const CorrelationTensor tensor =
      io::tensor_from_json(load_json_file(tensor_file));
  const NoSignalingReport ns = check_no_signaling(tensor);
  const ParadoxReport paradox =
      score(tensor, ResidualContexts::Strict);

  write_json(config, "verify_report.json",
             json{{"format", io::kFormatTag},
                  {"type", "verify_report"},
                  {"no_signaling", io::to_json(ns)},
                  {"paradox", io::to_json(paradox)},
                  {"no_signaling_ok", ns.max_violation <= config.tol},
                  {"residuals_ok", paradox.residual_max() <= config.tol}});
  if (config.format == "csv") {
    std::ostringstream os;
    io::write_tensor_csv(os, tensor);
    write_text(config, "verify_tensor.csv", os.str());
  }
  return 0;
}

}  // namespace gmn
