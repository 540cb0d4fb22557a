#pragma once

#include <nlohmann/json_fwd.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "gmn/correlations.hpp"
#include "gmn/entanglement.hpp"
#include "gmn/optimize.hpp"
#include "gmn/paradox.hpp"
#include "gmn/selftest.hpp"
#include "gmn/state.hpp"

namespace gmn::io {

inline constexpr const char* kFormatTag = "gmn/v1";

nlohmann::json to_json(const StateVector& state);
nlohmann::json to_json(const MeasurementBasis& basis);
nlohmann::json to_json(const ConstrainedFamilyParams& params);
nlohmann::json to_json(const CorrelationTensor& tensor);
nlohmann::json to_json(const ParadoxReport& report);
nlohmann::json to_json(const NoSignalingReport& report);
nlohmann::json to_json(const LPCertificate& cert);
nlohmann::json to_json(const OptimizationResult& result);
nlohmann::json to_json(const SweepRecord& record);
nlohmann::json to_json(const CertificationReport& report);

StateVector state_from_json(const nlohmann::json& j);
MeasurementBasis basis_from_json(const nlohmann::json& j);
ConstrainedFamilyParams family_params_from_json(const nlohmann::json& j);
CorrelationTensor tensor_from_json(const nlohmann::json& j);

/// settings,outcomes,probability rows, one per tensor entry.
void write_tensor_csv(std::ostream& os, const CorrelationTensor& tensor);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records,
                     bool vector_norm_p_eps = false);

/// One row per monotone, one triple of columns per state:
/// value, paper_value (blank when unknown), delta.
struct TableColumn {
  MonotoneRow computed;
  std::vector<double> paper_values;  // empty or one per monotone (5)
};
void write_tables_csv(std::ostream& os, const std::vector<TableColumn>& columns);

std::string format_double(double v);

}  // namespace gmn::io
