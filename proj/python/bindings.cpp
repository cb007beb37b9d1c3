#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homsiegel/catalog.hpp"
#include "homsiegel/geometry.hpp"
#include "homsiegel/io.hpp"
#include "homsiegel/oracle.hpp"
#include "homsiegel/sampling.hpp"

namespace py = pybind11;
using namespace homsiegel;

namespace {

// Specs and reports cross the boundary as JSON text; the Python side decodes.
Realization realization(const std::string& spec_json) { return Realization(spec_from_json(json::parse(spec_json))); }

ExponentConvention convention(const std::string& name) {
  if (name == "calibrated") return ExponentConvention::calibrated;
  if (name == "doubled") return ExponentConvention::doubled;
  throw StructuralError("unknown exponent convention: " + name);
}

SiegelPoint point(const Realization& r, const ComplexMatrix& Z, const std::optional<ComplexMatrix>& U) {
  SiegelPoint p{Z, U ? *U : ComplexMatrix::Zero(r.nu_total(), r.nu0())};
  if (!r.is_structured(p)) throw StructuralError("point does not have the structure of the spec");
  if (!in_domain(r, p)) throw DomainError("point outside the domain");
  return p;
}

std::string catalog_spec(const std::string& name) {
  if (name == "disk") return spec_to_json(catalog::disk()).dump();
  if (name == "sym2") return spec_to_json(catalog::sym(2)).dump();
  if (name == "sym3") return spec_to_json(catalog::sym(3)).dump();
  if (name == "vinberg") return spec_to_json(catalog::vinberg()).dump();
  if (name == "ball") return spec_to_json(catalog::ball()).dump();
  if (name == "rank2_type2") return spec_to_json(catalog::rank2_type2()).dump();
  if (name == "lorentz") return spec_to_json(catalog::lorentz()).dump();
  if (name == "bad_v3") return spec_to_json(catalog::bad_v3()).dump();
  throw StructuralError("unknown catalog domain: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BranchError>(m, "BranchError", PyExc_ArithmeticError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def("catalog_spec", &catalog_spec, py::arg("name"));
  m.def("validate", [](const std::string& spec) { return to_json(validate_spec(spec_from_json(json::parse(spec)))).dump(); },
        py::arg("spec"));
  m.def(
      "exponents",
      [](const std::string& spec, const std::string& conv) {
        return to_json(exponent_data(spec_from_json(json::parse(spec)), convention(conv))).dump();
      },
      py::arg("spec"), py::arg("convention") = "calibrated");
  m.def(
      "base_point",
      [](const std::string& spec) {
        const Realization r = realization(spec);
        const SiegelPoint p = r.base_point();
        return py::make_tuple(p.Z, p.U);
      },
      py::arg("spec"));
  m.def(
      "random_point",
      [](const std::string& spec, std::uint64_t seed, std::uint64_t stream, double spread) {
        const Realization r = realization(spec);
        CounterRng rng(seed, stream);
        const SiegelPoint p = random_point(r, rng, spread);
        return py::make_tuple(p.Z, p.U);
      },
      py::arg("spec"), py::arg("seed") = 42, py::arg("stream") = 0, py::arg("spread") = 0.5);
  m.def(
      "kernel",
      [](const std::string& spec, const ComplexMatrix& Z1, const std::optional<ComplexMatrix>& U1,
         const ComplexMatrix& Z2, const std::optional<ComplexMatrix>& U2, const std::string& form) {
        const Realization r = realization(spec);
        const SiegelPoint p = point(r, Z1, U1), q = point(r, Z2, U2);
        KernelForm f = KernelForm::ratio;
        if (form == "product") f = KernelForm::product;
        else if (form == "siegel") f = KernelForm::siegel;
        else if (form != "ratio") throw StructuralError("form must be ratio, product or siegel");
        return evaluate_kernel(r, p, q, f).value.log;
      },
      py::arg("spec"), py::arg("Z1"), py::arg("U1"), py::arg("Z2"), py::arg("U2"), py::arg("form") = "ratio",
      "Logarithm of the kernel value.");
  m.def(
      "metric",
      [](const std::string& spec, const ComplexMatrix& Z, const std::optional<ComplexMatrix>& U) {
        const Realization r = realization(spec);
        return bergman_metric(r, point(r, Z, U)).G;
      },
      py::arg("spec"), py::arg("Z"), py::arg("U") = py::none());
  m.def("distance_disk", &distance_disk, py::arg("W1"), py::arg("W2"), py::arg("n"));
  m.def(
      "envelope",
      [](const std::string& spec, double rho, int samples, std::uint64_t seed) {
        return to_json(envelope_experiment(realization(spec), rho, samples, seed)).dump();
      },
      py::arg("spec"), py::arg("rho") = 1.0, py::arg("samples") = 500, py::arg("seed") = 42);
  m.def(
      "far_field",
      [](const std::string& spec, double rho, int z_samples, int w_samples, std::uint64_t seed) {
        return to_json(far_field_experiment(realization(spec), rho, z_samples, w_samples, seed)).dump();
      },
      py::arg("spec"), py::arg("rho") = 0.5, py::arg("z_samples") = 20, py::arg("w_samples") = 10000,
      py::arg("seed") = 42);
  m.def(
      "oracle_kernel",
      [](const std::string& domain, int degree, long samples, std::uint64_t seed, const std::string& conv) {
        if (domain == "disk") return to_json(oracle_kernel_disk(degree, samples, seed)).dump();
        if (domain == "bidisk") return to_json(oracle_kernel_bidisk(degree, samples, seed)).dump();
        if (domain == "u2") return to_json(oracle_kernel_spec_cayley(catalog::sym(2), degree, samples, seed, convention(conv))).dump();
        throw StructuralError("domain must be disk, bidisk or u2");
      },
      py::arg("domain"), py::arg("degree"), py::arg("samples") = 1000000, py::arg("seed") = 42,
      py::arg("convention") = "calibrated");
  m.def(
      "oracle_volume",
      [](const std::string& domain, long samples, std::uint64_t seed) {
        return to_json(oracle_volume(domain, samples, seed)).dump();
      },
      py::arg("domain"), py::arg("samples") = 1000000, py::arg("seed") = 42);
}
