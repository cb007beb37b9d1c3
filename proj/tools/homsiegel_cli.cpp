#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "homsiegel/catalog.hpp"
#include "homsiegel/geometry.hpp"
#include "homsiegel/io.hpp"
#include "homsiegel/oracle.hpp"
#include "homsiegel/sampling.hpp"

namespace hs = homsiegel;
using hs::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

struct RunConfig {
  std::string spec_path;
  std::string points_path;
  std::string form = "both";
  std::string out_path;
  std::string format = "json";
  std::string domain = "disk";
  std::string convention = "calibrated";
  std::optional<double> rho;
  std::optional<long> samples;
  std::optional<int> degree;
  int z_samples = 20;
  int random_pairs = 0;
  std::uint64_t seed = 42;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw hs::IoError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string csv_cell(const json& v) {
  if (v.is_number_float()) return num(v.get<double>());
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
    return s;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit_report(const RunConfig& cfg, const json& report) {
  Output out(cfg.out_path);
  if (cfg.format == "csv") {
    out.stream() << "key,value\n";
    for (const auto& [k, v] : report.items()) out.stream() << k << ',' << csv_cell(v) << '\n';
  } else {
    out.stream() << report.dump(2) << '\n';
  }
}

hs::ExponentConvention parse_convention(const std::string& name) {
  if (name == "calibrated") return hs::ExponentConvention::calibrated;
  if (name == "doubled") return hs::ExponentConvention::doubled;
  throw hs::StructuralError("unknown exponent convention: " + name);
}

hs::RealizationSpec require_spec(const RunConfig& cfg) {
  if (cfg.spec_path.empty()) throw hs::IoError("--spec is required");
  return hs::load_spec(cfg.spec_path);
}

// Loads the spec and refuses to go on when the axioms fail.
std::optional<hs::Realization> validated_realization(const RunConfig& cfg) {
  hs::RealizationSpec spec = require_spec(cfg);
  const hs::ValidationReport report = hs::validate_spec(spec);
  if (!report.pass()) {
    std::cerr << "spec fails validation: " << hs::to_json(report).dump() << '\n';
    return std::nullopt;
  }
  return hs::Realization(std::move(spec));
}

std::vector<hs::PointPair> input_pairs(const RunConfig& cfg, const hs::Realization& r, int default_count) {
  if (!cfg.points_path.empty()) return hs::pairs_from_json(hs::load_json(cfg.points_path), r);
  const int count = cfg.random_pairs > 0 ? cfg.random_pairs : default_count;
  std::vector<hs::PointPair> pairs;
  for (int i = 0; i < count; ++i) {
    hs::CounterRng rng(cfg.seed, static_cast<std::uint64_t>(i));
    hs::SiegelPoint zeta = hs::random_point(r, rng);
    hs::SiegelPoint eta = hs::random_point(r, rng);
    pairs.push_back({std::move(zeta), std::move(eta)});
  }
  return pairs;
}

double rel_diff(const hs::KernelValue& a, const hs::KernelValue& b) { return std::abs(std::exp(b.log - a.log) - 1.0); }

int cmd_validate(const RunConfig& cfg) {
  const hs::ValidationReport report = hs::validate_spec(require_spec(cfg));
  emit_report(cfg, hs::to_json(report));
  return report.pass() ? kExitPass : kExitFail;
}

int cmd_exponents(const RunConfig& cfg) {
  const hs::ExponentData exps = hs::exponent_data(require_spec(cfg), parse_convention(cfg.convention));
  Output out(cfg.out_path);
  if (cfg.format == "csv") {
    auto& os = out.stream();
    os << "table,index,values\n";
    for (Eigen::Index k = 0; k < exps.c.rows(); ++k) {
      os << "c," << k + 1 << ',';
      for (Eigen::Index i = 0; i <= k; ++i) os << (i ? ";" : "") << exps.c(k, i);
      os << '\n';
    }
    for (std::size_t k = 0; k < exps.e.size(); ++k) os << "e," << k + 1 << ',' << exps.e[k] << '\n';
    for (std::size_t k = 0; k < exps.s.size(); ++k) os << "s," << k + 1 << ',' << exps.s[k] << '\n';
  } else {
    out.stream() << hs::to_json(exps).dump(2) << '\n';
  }
  return kExitPass;
}

int cmd_eval(const RunConfig& cfg) {
  if (cfg.form != "ratio" && cfg.form != "product" && cfg.form != "both") {
    throw hs::StructuralError("--form must be ratio, product or both");
  }
  const auto r = validated_realization(cfg);
  if (!r) return kExitFail;
  const hs::ExponentData exps = hs::exponent_data(r->spec());
  const auto pairs = input_pairs(cfg, *r, 10);

  json rows = json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [zeta, eta] = pairs[i];
    std::optional<hs::KernelValue> ratio, product;
    if (cfg.form != "product") ratio = hs::k_minimal_ratio(*r, exps, zeta, eta);
    if (cfg.form != "ratio") product = hs::k_minimal_product(*r, exps, zeta, eta);
    const hs::KernelValue& v = product ? *product : *ratio;
    json row = {{"pair", i}, {"re", v.value().real()}, {"im", v.value().imag()},
                {"log_re", v.log.real()}, {"log_im", v.log.imag()}};
    row["rel_diff"] = ratio && product ? json(rel_diff(*ratio, *product)) : json(nullptr);
    rows.push_back(row);
  }

  Output out(cfg.out_path);
  if (cfg.format == "json") {
    out.stream() << rows.dump(2) << '\n';
  } else {
    auto& os = out.stream();
    os << "pair,re,im,log_re,log_im,rel_diff\n";
    for (const auto& row : rows) {
      os << row["pair"].get<std::size_t>() << ',' << num(row["re"]) << ',' << num(row["im"]) << ','
         << num(row["log_re"]) << ',' << num(row["log_im"]) << ','
         << (row["rel_diff"].is_null() ? "" : num(row["rel_diff"])) << '\n';
    }
  }
  return kExitPass;
}

int verify_envelope(const RunConfig& cfg) {
  const auto r = validated_realization(cfg);
  if (!r) return kExitFail;
  const auto report =
      hs::envelope_experiment(*r, cfg.rho.value_or(1.0), static_cast<int>(cfg.samples.value_or(500)), cfg.seed);
  emit_report(cfg, hs::to_json(report));
  return report.pass ? kExitPass : kExitFail;
}

int verify_far_field(const RunConfig& cfg) {
  const auto r = validated_realization(cfg);
  if (!r) return kExitFail;
  const auto report = hs::far_field_experiment(*r, cfg.rho.value_or(0.5), cfg.z_samples,
                                            static_cast<int>(cfg.samples.value_or(10000)), cfg.seed);
  emit_report(cfg, hs::to_json(report));
  return report.pass ? kExitPass : kExitFail;
}

constexpr double kIdentityTolerance = 1e-8;

int verify_identity(const RunConfig& cfg) {
  const auto r = validated_realization(cfg);
  if (!r) return kExitFail;
  const hs::ExponentData exps = hs::exponent_data(r->spec());
  const auto pairs = input_pairs(cfg, *r, static_cast<int>(cfg.samples.value_or(100)));
  double worst = 0.0;
  for (const auto& [zeta, eta] : pairs) {
    worst = std::max(worst, rel_diff(hs::k_minimal_ratio(*r, exps, zeta, eta),
                                     hs::k_minimal_product(*r, exps, zeta, eta)));
  }
  const bool pass = worst < kIdentityTolerance;
  emit_report(cfg, {{"pairs", pairs.size()},
                    {"seed", cfg.seed},
                    {"max_rel_diff", worst},
                    {"tolerance", kIdentityTolerance},
                    {"pass", pass}});
  return pass ? kExitPass : kExitFail;
}

int verify_oracle_kernel(const RunConfig& cfg) {
  const long samples = cfg.samples.value_or(1000000);
  const auto convention = parse_convention(cfg.convention);
  hs::OracleKernelReport report;
  if (cfg.domain == "disk") {
    report = hs::oracle_kernel_disk(cfg.degree.value_or(12), samples, cfg.seed);
  } else if (cfg.domain == "bidisk") {
    report = hs::oracle_kernel_bidisk(cfg.degree.value_or(6), samples, cfg.seed);
  } else if (cfg.domain == "u2") {
    report = hs::oracle_kernel_spec_cayley(hs::catalog::sym(2), cfg.degree.value_or(8), samples, cfg.seed, convention);
  } else if (cfg.domain == "spec-cayley") {
    report = hs::oracle_kernel_spec_cayley(require_spec(cfg), cfg.degree.value_or(8), samples, cfg.seed, convention);
  } else {
    throw hs::StructuralError("--domain must be disk, bidisk, u2 or spec-cayley");
  }
  emit_report(cfg, hs::to_json(report));
  return report.pass ? kExitPass : kExitFail;
}

int verify_oracle_volume(const RunConfig& cfg) {
  const auto report = hs::oracle_volume(cfg.domain, cfg.samples.value_or(1000000), cfg.seed);
  emit_report(cfg, hs::to_json(report));
  return report.pass ? kExitPass : kExitFail;
}

void add_output_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_seed(CLI::App* cmd, RunConfig& cfg) { cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bergman kernels of homogeneous Siegel domains and their minimal bounded realizations"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check a domain spec against the realization axioms");
  validate->add_option("--spec", cfg.spec_path, "Domain spec JSON")->required();
  add_output_flags(validate, cfg);
  validate->callback([&] { action = [&] { return cmd_validate(cfg); }; });

  auto* exponents = app.add_subcommand("exponents", "Print the c, e and s exponent tables");
  exponents->add_option("--spec", cfg.spec_path, "Domain spec JSON")->required();
  exponents->add_option("--convention", cfg.convention, "calibrated or doubled");
  add_output_flags(exponents, cfg);
  exponents->callback([&] { action = [&] { return cmd_exponents(cfg); }; });

  auto* eval = app.add_subcommand("eval", "Evaluate the minimal-domain kernel on point pairs");
  cfg.format = "json";
  eval->add_option("--spec", cfg.spec_path, "Domain spec JSON")->required();
  eval->add_option("--points", cfg.points_path, "JSON list of {zeta, eta} pairs");
  eval->add_option("--random", cfg.random_pairs, "Evaluate on N random pairs instead");
  eval->add_option("--form", cfg.form, "ratio, product or both")->capture_default_str();
  add_seed(eval, cfg);
  eval->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  auto* eval_format = eval->add_option("--format", cfg.format, "Output format (default csv)");
  eval_format->check(CLI::IsMember({"csv", "json"}));
  eval->callback([&, eval_format] {
    if (eval_format->count() == 0) cfg.format = "csv";
    action = [&] { return cmd_eval(cfg); };
  });

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its report");
  verify->require_subcommand(1);
  auto add_suite = [&](const std::string& name, const std::string& help, int (*fn)(const RunConfig&)) {
    auto* cmd = verify->add_subcommand(name, help);
    add_seed(cmd, cfg);
    add_output_flags(cmd, cfg);
    cmd->add_option("--samples", cfg.samples, "Sample count");
    cmd->callback([&, fn] { action = [&, fn] { return fn(cfg); }; });
    return cmd;
  };
  auto* envelope_cmd = add_suite("theorem-a", "Kernel ratios against the distance envelope", verify_envelope);
  envelope_cmd->add_option("--spec", cfg.spec_path, "Domain spec JSON")->required();
  envelope_cmd->add_option("--rho", cfg.rho, "Distance radius (default 1)");
  auto* far_field_cmd = add_suite("prop62", "Near-diagonal kernel bounds against far-field points", verify_far_field);
  far_field_cmd->add_option("--spec", cfg.spec_path, "Domain spec JSON")->required();
  far_field_cmd->add_option("--rho", cfg.rho, "Distance radius (default 0.5)");
  far_field_cmd->add_option("--z-samples", cfg.z_samples, "Near-diagonal points, the first being p0")->capture_default_str();
  auto* identity = add_suite("identity", "Ratio form against product form", verify_identity);
  identity->add_option("--spec", cfg.spec_path, "Domain spec JSON")->required();
  identity->add_option("--points", cfg.points_path, "JSON list of {zeta, eta} pairs");
  auto* oracle_kernel = add_suite("oracle-kernel", "Monte-Carlo kernel oracle", verify_oracle_kernel);
  oracle_kernel->add_option("--domain", cfg.domain, "disk, bidisk, u2 or spec-cayley")->capture_default_str();
  oracle_kernel->add_option("--spec", cfg.spec_path, "Domain spec JSON for spec-cayley");
  oracle_kernel->add_option("--degree", cfg.degree, "Monomial degree");
  oracle_kernel->add_option("--convention", cfg.convention, "calibrated or doubled");
  auto* oracle_volume = add_suite("oracle-volume", "Monte-Carlo volume against closed forms", verify_oracle_volume);
  oracle_volume->add_option("--domain", cfg.domain, "disk, bidisk or u2")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Alias group for the oracle suites");
  oracle->require_subcommand(1);
  auto* oracle_kernel_alias = oracle->add_subcommand("kernel", "Same as verify oracle-kernel");
  add_seed(oracle_kernel_alias, cfg);
  add_output_flags(oracle_kernel_alias, cfg);
  oracle_kernel_alias->add_option("--samples", cfg.samples, "Sample count");
  oracle_kernel_alias->add_option("--domain", cfg.domain, "disk, bidisk, u2 or spec-cayley");
  oracle_kernel_alias->add_option("--spec", cfg.spec_path, "Domain spec JSON for spec-cayley");
  oracle_kernel_alias->add_option("--degree", cfg.degree, "Monomial degree");
  oracle_kernel_alias->add_option("--convention", cfg.convention, "calibrated or doubled");
  oracle_kernel_alias->callback([&] { action = [&] { return verify_oracle_kernel(cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    return action();
  } catch (const hs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
