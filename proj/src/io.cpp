#include "homsiegel/io.hpp"

#include <fstream>
#include <sstream>

namespace homsiegel {
namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw StructuralError("complex entries must be numbers or [re, im] pairs");
}

template <typename Entry>
void check_rows(const json& j, Entry&& entry_ok) {
  if (!j.is_array()) throw StructuralError("matrix must be a list of rows");
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw StructuralError("matrix rows must be lists");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) throw StructuralError("matrix rows have different lengths");
    for (const auto& e : j[i]) entry_ok(e);
  }
}

std::pair<int, int> parse_block_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw StructuralError("V keys must look like \"l,k\": " + key);
  try {
    return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
  } catch (const std::exception&) {
    throw StructuralError("V keys must look like \"l,k\": " + key);
  }
}

}  // namespace

json real_matrix_to_json(const RealMatrix& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(M(i, k));
    rows.push_back(row);
  }
  return rows;
}

RealMatrix real_matrix_from_json(const json& j) {
  check_rows(j, [](const json& e) {
    if (!e.is_number()) throw StructuralError("real matrix entries must be numbers");
  });
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  RealMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k) M(i, k) = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<double>();
  return M;
}

json complex_matrix_to_json(const ComplexMatrix& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(complex_to_json(M(i, k)));
    rows.push_back(row);
  }
  return rows;
}

ComplexMatrix complex_matrix_from_json(const json& j) {
  check_rows(j, [](const json& e) { complex_from_json(e); });
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k)
      M(i, k) = complex_from_json(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
  return M;
}

RealizationSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw StructuralError("spec must be a JSON object");
  RealizationSpec spec;
  try {
    spec.nu0 = j.value("nu0", 0);
    spec.nu = j.at("nu").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw StructuralError(std::string("spec needs integer nu0 and list nu: ") + e.what());
  }
  if (j.contains("V")) {
    if (!j["V"].is_object()) throw StructuralError("V must be an object keyed by \"l,k\"");
    for (const auto& [key, list] : j["V"].items()) {
      if (!list.is_array()) throw StructuralError("V entries must be lists of matrices");
      auto& basis = spec.v_basis[parse_block_key(key)];
      for (const auto& m : list) basis.push_back(real_matrix_from_json(m));
    }
  }
  spec.w_basis.assign(spec.nu.size(), {});
  if (j.contains("W")) {
    if (!j["W"].is_object()) throw StructuralError("W must be an object keyed by block index");
    for (const auto& [key, list] : j["W"].items()) {
      int k = 0;
      try {
        k = std::stoi(key);
      } catch (const std::exception&) {
        throw StructuralError("W keys must be block indices: " + key);
      }
      if (k < 1 || k > static_cast<int>(spec.nu.size())) throw StructuralError("W block index out of range: " + key);
      if (!list.is_array()) throw StructuralError("W entries must be lists of matrices");
      for (const auto& m : list) spec.w_basis[static_cast<std::size_t>(k - 1)].push_back(complex_matrix_from_json(m));
    }
  }
  return spec;
}

json spec_to_json(const RealizationSpec& spec) {
  json j;
  j["nu0"] = spec.nu0;
  j["nu"] = spec.nu;
  json V = json::object();
  for (const auto& [key, basis] : spec.v_basis) {
    json list = json::array();
    for (const auto& A : basis) list.push_back(real_matrix_to_json(A));
    V[std::to_string(key.first) + "," + std::to_string(key.second)] = list;
  }
  j["V"] = V;
  json W = json::object();
  for (std::size_t k = 0; k < spec.w_basis.size(); ++k) {
    if (spec.w_basis[k].empty()) continue;
    json list = json::array();
    for (const auto& C : spec.w_basis[k]) list.push_back(complex_matrix_to_json(C));
    W[std::to_string(k + 1)] = list;
  }
  j["W"] = W;
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
}

RealizationSpec load_spec(const std::string& path) { return spec_from_json(load_json(path)); }

json point_to_json(const SiegelPoint& p) {
  json j;
  j["Z"] = complex_matrix_to_json(p.Z);
  if (p.U.cols() > 0) j["U"] = complex_matrix_to_json(p.U);
  return j;
}

SiegelPoint point_from_json(const json& j, const Realization& r) {
  if (!j.is_object() || !j.contains("Z")) throw StructuralError("points need a \"Z\" matrix");
  SiegelPoint p{complex_matrix_from_json(j["Z"]), ComplexMatrix::Zero(r.nu_total(), r.nu0())};
  if (j.contains("U")) p.U = complex_matrix_from_json(j["U"]);
  if (!r.is_structured(p)) throw StructuralError("point does not have the structure of the spec");
  if (!in_domain(r, p)) throw DomainError("point outside the domain");
  return p;
}

std::vector<PointPair> pairs_from_json(const json& j, const Realization& r) {
  const json& list = j.is_object() && j.contains("pairs") ? j["pairs"] : j;
  if (!list.is_array()) throw StructuralError("points file must be a list of {\"zeta\", \"eta\"} pairs");
  std::vector<PointPair> out;
  for (const auto& item : list) {
    if (!item.is_object() || !item.contains("zeta") || !item.contains("eta")) {
      throw StructuralError("each pair needs \"zeta\" and \"eta\"");
    }
    out.push_back({point_from_json(item["zeta"], r), point_from_json(item["eta"], r)});
  }
  return out;
}

json pairs_to_json(const std::vector<PointPair>& pairs) {
  json list = json::array();
  for (const auto& p : pairs) list.push_back({{"zeta", point_to_json(p.zeta)}, {"eta", point_to_json(p.eta)}});
  return list;
}

json to_json(const ValidationReport& report) {
  json v = json::array();
  for (const auto& x : report.violations) v.push_back({{"axiom", x.axiom}, {"indices", x.indices}, {"residual", x.residual}});
  return {{"pass", report.pass()}, {"violations", v}};
}

json to_json(const ExponentData& exps) {
  json c = json::array();
  for (Eigen::Index k = 0; k < exps.c.rows(); ++k) {
    json row = json::array();
    for (Eigen::Index i = 0; i < exps.c.cols(); ++i) row.push_back(exps.c(k, i));
    c.push_back(row);
  }
  return {{"c", c}, {"dims_v", exps.dims_v}, {"b", exps.b}, {"e", exps.e}, {"s", exps.s}};
}

json to_json(const EnvelopeReport& r) {
  return {{"rho", r.rho},
          {"seed", r.seed},
          {"pairs", r.pairs},
          {"candidates", r.candidates},
          {"min", r.min_ratio},
          {"max", r.max_ratio},
          {"bound", r.bound},
          {"lipschitz_M", r.lipschitz},
          {"disk_constants", r.disk_constant},
          {"disk_constants_sampled", r.disk_sampled},
          {"max_disk_distance_excess", r.max_disk_distance_excess},
          {"pass", r.pass}};
}

json to_json(const FarFieldReport& r) {
  return {{"rho", r.rho},
          {"seed", r.seed},
          {"z_samples", r.z_samples},
          {"w_samples", r.w_samples},
          {"min", r.min_abs},
          {"max", r.max_abs},
          {"bound", r.bound},
          {"base_row_deviation", r.base_row_deviation},
          {"pass", r.pass}};
}

json to_json(const OracleKernelReport& r) {
  return {{"domain", r.domain},
          {"degree", r.degree},
          {"samples", r.samples},
          {"seed", r.seed},
          {"basis_size", r.basis_size},
          {"hits", r.hits},
          {"gram_condition", r.condition},
          {"test_pairs", r.test_pairs},
          {"max_rel_error", r.max_rel_error},
          {"fitted_constant", complex_to_json(r.fitted_constant)},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

json to_json(const VolumeEstimate& e) {
  return {{"volume", e.volume}, {"std_error", e.std_error}, {"hits", e.hits}, {"samples", e.samples}};
}

json to_json(const OracleVolumeReport& r) {
  json j = to_json(r.estimate);
  j["domain"] = r.domain;
  j["exact"] = r.exact;
  j["z_score"] = r.z_score;
  j["pass"] = r.pass;
  return j;
}

}  // namespace homsiegel
