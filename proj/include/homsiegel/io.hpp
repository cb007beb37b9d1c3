#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "homsiegel/geometry.hpp"
#include "homsiegel/oracle.hpp"

namespace homsiegel {

using json = nlohmann::json;

class IoError : public Error {
 public:
  using Error::Error;
};

// Spec files: {"nu0": int, "nu": [int], "V": {"l,k": [real matrix]},
// "W": {"k": [complex matrix]}}. Matrices are lists of rows; complex entries
// are [re, im] pairs.

RealizationSpec spec_from_json(const json& j);
json spec_to_json(const RealizationSpec& spec);
/// Throws IoError when the file cannot be read or parsed.
RealizationSpec load_spec(const std::string& path);
json load_json(const std::string& path);

json real_matrix_to_json(const RealMatrix& M);
RealMatrix real_matrix_from_json(const json& j);
json complex_matrix_to_json(const ComplexMatrix& M);
/// Accepts [re, im] pairs or bare real numbers as entries.
ComplexMatrix complex_matrix_from_json(const json& j);

/// {"Z": complex matrix, "U": complex matrix}; U may be omitted when nu0 = 0.
json point_to_json(const SiegelPoint& p);
SiegelPoint point_from_json(const json& j, const Realization& r);

struct PointPair {
  SiegelPoint zeta;
  SiegelPoint eta;
};

/// A list of {"zeta": point, "eta": point}. Points must be structured and
/// in the domain (StructuralError / DomainError otherwise).
std::vector<PointPair> pairs_from_json(const json& j, const Realization& r);
json pairs_to_json(const std::vector<PointPair>& pairs);

json to_json(const ValidationReport& report);
json to_json(const ExponentData& exps);
json to_json(const EnvelopeReport& report);
json to_json(const FarFieldReport& report);
json to_json(const OracleKernelReport& report);
json to_json(const VolumeEstimate& estimate);
json to_json(const OracleVolumeReport& report);

}  // namespace homsiegel
