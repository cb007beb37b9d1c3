#include <doctest.h>

#include <numbers>

#include "homsiegel/oracle.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("volumes") {
  const VolumeEstimate disk = mc_volume(unit_disk_indicator(), unit_disk_box(), 1000000, 42);
  CHECK(std::abs(disk.volume - std::numbers::pi) < 3 * disk.std_error);

  const VolumeEstimate u2 = mc_volume(siegel_disk_indicator(2), siegel_disk_box(2), 1000000, 42);
  CHECK(std::isfinite(u2.volume));
  CHECK(u2.volume == doctest::Approx(5.14214).epsilon(1e-5));
  const VolumeEstimate u2_again = mc_volume(siegel_disk_indicator(2), siegel_disk_box(2), 1000000, 42);
  CHECK(u2_again.volume == u2.volume);

  CHECK_THROWS_AS(mc_volume([](const RealVector&) { return false; }, unit_disk_box(), 1000, 1), NumericalError);
  CHECK(oracle_volume("bidisk", 200000, 3).pass);
  CHECK_THROWS_AS(oracle_volume("annulus", 10, 1), StructuralError);
}

TEST_CASE("monomials") {
  const auto exps = monomial_exponents(2, 2);
  CHECK(exps.size() == 6);
  CHECK(exps.front() == std::vector<int>{0, 0});
  ComplexVector z(2);
  z << cplx(2, 0), cplx(0, 1);
  const ComplexVector m = eval_monomials(exps, z);
  CHECK(std::abs(m(0) - 1.0) < 1e-15);
  for (std::size_t k = 0; k < exps.size(); ++k) {
    const cplx expected = std::pow(z(0), exps[k][0]) * std::pow(z(1), exps[k][1]);
    CHECK(std::abs(m(static_cast<Eigen::Index>(k)) - expected) < 1e-14);
  }
}

TEST_CASE("Siegel disk coordinates") {
  ComplexMatrix W(2, 2);
  W << cplx(0.1, 0.2), cplx(0.3, 0), cplx(0.3, 0), cplx(-0.2, 0.1);
  CHECK(rel(siegel_disk_matrix(siegel_disk_coords(W), 2), W) < 1e-15);
  CHECK(siegel_disk_indicator(2)(RealVector::Zero(6)));
}

TEST_CASE("disk kernel oracle") {
  const OracleKernelReport rep = oracle_kernel_disk(12, 1000000, 42);
  CHECK(rep.pass);
  CHECK(rep.max_rel_error < 0.02);
  CHECK(rep.condition <= kMaxGramCondition);

  const MonteCarloKernel K(unit_disk_indicator(), unit_disk_box(), 12, 1000000, 42);
  ComplexVector zero = ComplexVector::Zero(1);
  CHECK(std::abs(K(zero, zero) - 1.0 / std::numbers::pi) < 0.02 / std::numbers::pi);
}

TEST_CASE("bidisk kernel oracle") {
  const OracleKernelReport rep = oracle_kernel_bidisk(6, 1000000, 42);
  CHECK(rep.pass);
  const MonteCarloKernel K(bidisk_indicator(), bidisk_box(), 6, 1000000, 42);
  const ComplexVector zero = ComplexVector::Zero(2);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(std::abs(K(zero, zero) - 1.0 / pi2) < 0.03 / pi2);
}

TEST_CASE("reproducing property") {
  const MonteCarloKernel K(unit_disk_indicator(), unit_disk_box(), 8, 200000, 1);
  const HolomorphicFunction f = [](const ComplexVector& z) { return 1.0 + 2.0 * z(0) * z(0); };
  ComplexVector z(1);
  z << cplx(0.2, -0.1);
  const KernelFunction k = [&](const ComplexVector& a, const ComplexVector& b) { return K(a, b); };
  CHECK(reproducing_check(k, f, z, unit_disk_indicator(), unit_disk_box(), 400000, 2) < 0.05);
}

TEST_CASE("Gram conditioning guard") {
  CHECK_THROWS_AS(MonteCarloKernel(unit_disk_indicator(), unit_disk_box(), 60, 40, 1), NumericalError);
}

TEST_CASE("spec-cayley oracle arbitrates the exponent convention") {
  const OracleKernelReport good = oracle_kernel_spec_cayley(catalog::sym(2), 8, 1000000, 42);
  CHECK(good.pass);
  CHECK(good.max_rel_error < 0.05);
  const OracleKernelReport bad =
      oracle_kernel_spec_cayley(catalog::sym(2), 8, 1000000, 42, ExponentConvention::doubled);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_rel_error > 0.05);

  const OracleKernelReport disk = oracle_kernel_spec_cayley(catalog::disk(), 12, 1000000, 42);
  CHECK(disk.pass);
  CHECK(std::abs(disk.fitted_constant - 1.0 / std::numbers::pi) < 0.02 / std::numbers::pi);

  CHECK_FALSE(is_full_symmetric_tube(catalog::vinberg()));
  CHECK(is_full_symmetric_tube(catalog::sym(3)));
  CHECK_THROWS_AS(oracle_kernel_spec_cayley(catalog::vinberg(), 4, 1000, 1), StructuralError);
}

TEST_CASE("transformation law") {
  for (auto spec : {catalog::vinberg(), catalog::ball()}) {
    Realization r(spec);
    CHECK(transformation_law_residual(r, ExponentConvention::calibrated, 50, 42) < 1e-10);
    CHECK(transformation_law_residual(r, ExponentConvention::doubled, 50, 42) > 1e-2);
  }
}
