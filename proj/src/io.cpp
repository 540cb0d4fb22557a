#include "gmn/io.hpp"

#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace gmn::io {

namespace {

using nlohmann::json;

void require_format(const json& j, const char* type) {
  if (!j.is_object() || j.value("format", "") != kFormatTag)
    throw std::invalid_argument(std::string("expected a ") + kFormatTag +
                                " document");
  if (j.value("type", "") != type)
    throw std::invalid_argument(std::string("expected type '") + type + "'");
}

json complex_array(const Eigen::VectorXcd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    arr.push_back({v(i).real(), v(i).imag()});
  return arr;
}

Eigen::VectorXcd complex_vector(const json& arr) {
  Eigen::VectorXcd v(arr.size());
  Eigen::Index i = 0;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("amplitudes must be [re, im] pairs");
    v(i++) = {pair[0].get<double>(), pair[1].get<double>()};
  }
  return v;
}

json real_array(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Eigen::VectorXd real_vector(const json& arr) {
  Eigen::VectorXd v(arr.size());
  Eigen::Index i = 0;
  for (const auto& x : arr) v(i++) = x.get<double>();
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json to_json(const StateVector& state) {
  return json{{"format", kFormatTag},
              {"type", "state_vector"},
              {"num_parties", state.num_parties},
              {"local_dims", state.local_dims},
              {"amplitudes", complex_array(state.amplitudes)}};
}

json to_json(const MeasurementBasis& basis) {
  return json{{"format", kFormatTag},
              {"type", "measurement_basis"},
              {"alpha", basis.alpha},
              {"phi", basis.phi}};
}

json to_json(const ConstrainedFamilyParams& params) {
  return json{{"format", kFormatTag},
              {"type", "constrained_family_params"},
              {"num_parties", params.num_parties},
              {"a", params.a},
              {"delta", params.delta},
              {"alphas", real_array(params.alphas)},
              {"phis", real_array(params.phis)}};
}

json to_json(const CorrelationTensor& tensor) {
  json rows = json::array();
  for (Eigen::Index s = 0; s < tensor.num_settings(); ++s) {
    json row = json::array();
    for (Eigen::Index x = 0; x < tensor.num_outcomes(); ++x)
      row.push_back(tensor.probabilities(s, x));
    rows.push_back(std::move(row));
  }
  return json{{"format", kFormatTag},
              {"type", "correlation_tensor"},
              {"num_parties", tensor.num_parties},
              {"outcomes_per_party", tensor.outcomes_per_party},
              {"probabilities", std::move(rows)}};
}

json to_json(const ParadoxReport& report) {
  json residuals = json::array();
  for (const auto& [id, value] : report.residuals)
    residuals.push_back({{"id", id}, {"value", value}});
  return json{{"format", kFormatTag},    {"type", "paradox_report"},
              {"residuals", residuals},  {"p_n", report.p_n},
              {"q_n", report.q_n},       {"score", report.score},
              {"epsilon", report.epsilon}};
}

json to_json(const NoSignalingReport& report) {
  return json{{"format", kFormatTag},
              {"type", "no_signaling_report"},
              {"max_violation", report.max_violation},
              {"worst_case", report.worst_case}};
}

json to_json(const LPCertificate& cert) {
  json j{{"format", kFormatTag},
         {"type", "lp_certificate"},
         {"feasible", cert.feasible},
         {"tolerance", cert.tolerance}};
  if (cert.feasible) {
    j["weights"] = real_array(cert.weights);
  } else {
    j["separating_functional"] = real_array(cert.separating_functional);
    j["gap"] = cert.gap;
  }
  return j;
}

json to_json(const OptimizationResult& result) {
  json j{{"format", kFormatTag},
         {"type", "optimization_result"},
         {"num_parties", result.num_parties},
         {"best_score", result.best_score},
         {"residual_max", result.residual_max},
         {"restarts", result.restarts},
         {"converged", result.converged},
         {"seed", result.seed}};
  if (result.family) j["family"] = to_json(*result.family);
  if (result.general) {
    j["general"] = json{{"amplitudes", complex_array(result.general->amplitudes)},
                        {"alphas", real_array(result.general->alphas)}};
  }
  return j;
}

json to_json(const SweepRecord& record) {
  return json{{"format", kFormatTag},
              {"type", "sweep_record"},
              {"epsilon", record.epsilon},
              {"qubit_max", record.qubit_max},
              {"local_bound", record.local_bound},
              {"p_eps", record.p_eps},
              {"p_eps_vector", record.p_eps_vector},
              {"ansatz_amplitudes", real_array(record.ansatz_amplitudes)},
              {"alphas", real_array(record.alphas)},
              {"converged", record.converged}};
}

json to_json(const CertificationReport& report) {
  return json{{"format", kFormatTag},
              {"type", "certification_report"},
              {"score", report.score},
              {"residual_max", report.residual_max},
              {"extraction_fidelity", report.extraction_fidelity},
              {"factorization_residual", report.factorization_residual},
              {"score_ok", report.score_ok},
              {"residuals_ok", report.residuals_ok},
              {"fidelity_ok", report.fidelity_ok},
              {"pass", report.pass},
              {"tol", report.tol}};
}

StateVector state_from_json(const json& j) {
  require_format(j, "state_vector");
  return make_state(j.at("num_parties").get<int>(),
                    j.at("local_dims").get<std::vector<int>>(),
                    complex_vector(j.at("amplitudes")));
}

MeasurementBasis basis_from_json(const json& j) {
  require_format(j, "measurement_basis");
  return build_measurement_basis(j.at("alpha").get<double>(),
                                 j.at("phi").get<double>());
}

ConstrainedFamilyParams family_params_from_json(const json& j) {
  require_format(j, "constrained_family_params");
  ConstrainedFamilyParams p;
  p.num_parties = j.at("num_parties").get<int>();
  p.a = j.at("a").get<double>();
  p.delta = j.at("delta").get<double>();
  p.alphas = real_vector(j.at("alphas"));
  p.phis = real_vector(j.at("phis"));
  return p;
}

CorrelationTensor tensor_from_json(const json& j) {
  require_format(j, "correlation_tensor");
  const int n = j.at("num_parties").get<int>();
  const auto outcomes = j.at("outcomes_per_party").get<std::vector<int>>();
  const auto& rows = j.at("probabilities");
  Eigen::Index cols = 1;
  for (int d : outcomes) cols *= d;
  Eigen::MatrixXd probs(rows.size(), cols);
  Eigen::Index s = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("tensor row has wrong length");
    Eigen::Index x = 0;
    for (const auto& v : row) probs(s, x++) = v.get<double>();
    ++s;
  }
  return make_tensor(n, outcomes, std::move(probs));
}

void write_tensor_csv(std::ostream& os, const CorrelationTensor& tensor) {
  os << "settings,outcomes,probability\n";
  const int n = tensor.num_parties;
  for (Eigen::Index s = 0; s < tensor.num_settings(); ++s) {
    std::string settings(n, '0');
    for (int p = 0; p < n; ++p)
      settings[p] = static_cast<char>('0' + ((s >> (n - 1 - p)) & 1));
    for (Eigen::Index x = 0; x < tensor.num_outcomes(); ++x) {
      std::string outcomes(n, '0');
      Eigen::Index rest = x;
      for (int p = n - 1; p >= 0; --p) {
        outcomes[p] =
            static_cast<char>('0' + (rest % tensor.outcomes_per_party[p]));
        rest /= tensor.outcomes_per_party[p];
      }
      os << settings << ',' << outcomes << ','
         << format_double(tensor.probabilities(s, x)) << '\n';
    }
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records,
                     bool vector_norm_p_eps) {
  os << "epsilon,qubit_max,local_bound,p_eps,eps_pow_1_14\n";
  for (const SweepRecord& r : records) {
    const double p = vector_norm_p_eps ? r.p_eps_vector : r.p_eps;
    const double bound = r.epsilon > 0.0 ? std::pow(r.epsilon, 1.0 / 14.0) : 0.0;
    os << format_double(r.epsilon) << ',' << format_double(r.qubit_max) << ','
       << format_double(r.local_bound) << ',' << format_double(p) << ','
       << format_double(bound) << '\n';
  }
}

void write_tables_csv(std::ostream& os, const std::vector<TableColumn>& cols) {
  const char* monotone_names[5] = {"concurrence", "negativity",
                                   "log_negativity", "entanglement_entropy",
                                   "renyi_entanglement_entropy"};
  os << "monotone";
  for (const TableColumn& c : cols)
    os << ',' << c.computed.state_name << ',' << c.computed.state_name
       << "_paper," << c.computed.state_name << "_delta";
  os << '\n';
  for (int m = 0; m < 5; ++m) {
    os << monotone_names[m];
    for (const TableColumn& c : cols) {
      const double values[5] = {
          c.computed.concurrence, c.computed.negativity,
          c.computed.log_negativity, c.computed.entanglement_entropy,
          c.computed.renyi_entropy};
      os << ',' << format_double(values[m]);
      if (c.paper_values.size() == 5) {
        os << ',' << format_double(c.paper_values[m]) << ','
           << format_double(values[m] - c.paper_values[m]);
      } else {
        os << ",,";
      }
    }
    os << '\n';
  }
}

}  // namespace gmn::io
