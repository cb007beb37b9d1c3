#include <doctest.h>

#include "homsiegel/geometry.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ComplexMatrix random_disk_point(int n, CounterRng& rng, double radius = 0.9) {
  RealMatrix A(n, n), B(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      A(i, k) = rng.normal();
      B(i, k) = rng.normal();
    }
  ComplexMatrix W = (A + A.transpose()).cast<cplx>() + kI * (B + B.transpose()).cast<cplx>();
  const double s = Eigen::JacobiSVD<ComplexMatrix>(W).singularValues()(0);
  return W * (radius * rng.uniform() / s);
}

}  // namespace

TEST_CASE("metric at the base point") {
  Realization disk(catalog::disk());
  CHECK(std::abs(bergman_metric(disk, disk.base_point()).G(0, 0) - 0.5) < 1e-14);

  Realization sym2(catalog::sym(2));
  const ComplexMatrix g = bergman_metric(sym2, sym2.base_point()).G;
  CHECK(std::abs(g(0, 0) - 0.75) < 1e-13);
  CHECK(std::abs(g(1, 1) - 0.75) < 1e-13);
  CHECK(std::abs(g(2, 2) - 1.5) < 1e-13);

  Realization ball(catalog::ball());
  const ComplexMatrix gb = bergman_metric(ball, ball.base_point()).G;
  CHECK(std::abs(gb(0, 0) - 0.75) < 1e-13);
  CHECK(std::abs(gb(1, 1) - 1.5) < 1e-13);
}

TEST_CASE("analytic and finite-difference metrics agree; positivity") {
  CounterRng rng(1, 0);
  for (const auto& [name, spec] : catalog::acceptance_domains()) {
    CAPTURE(name);
    Realization r(spec);
    const ExponentData exps = exponent_data(spec);
    for (int i = 0; i < 10; ++i) {
      const SiegelPoint p = random_point(r, rng, 1.0);
      const MetricForm g = bergman_metric(r, exps, p);
      const MetricForm f = bergman_metric_fd(r, exps, p);
      CHECK((g.G - f.G).norm() / g.G.norm() < 1e-6);
      CHECK(g.value(r.coordinates(random_tangent(r, rng))) > 0.0);
      CHECK(Eigen::SelfAdjointEigenSolver<ComplexMatrix>(g.G).eigenvalues()(0) > 0.0);
    }
  }
}

TEST_CASE("metric is invariant under the group") {
  CounterRng rng(2, 0);
  Realization r(catalog::vinberg());
  const ExponentData exps = exponent_data(r.spec());
  const SiegelPoint p = random_point(r, rng);
  const GroupElement b = random_group_element(r, rng);
  const Tangent v = random_tangent(r, rng);
  const SiegelPoint bv = {b.T.cast<cplx>() * v.Z * b.T.transpose().cast<cplx>(), b.T.cast<cplx>() * v.U};
  const double lhs = bergman_metric(r, exps, group_act(b, p)).value(r.coordinates(bv));
  const double rhs = bergman_metric(r, exps, p).value(r.coordinates(v));
  CHECK(std::abs(lhs - rhs) < 1e-10 * rhs);
}

TEST_CASE("disk metric formulas") {
  CounterRng rng(3, 0);
  const ComplexMatrix dW = scalar({0.3, -0.4});
  CHECK(std::abs(metric_disk(ComplexMatrix::Zero(1, 1), dW) - 2 * 0.25) < 1e-15);
  const cplx w(0.3, 0.5);
  CHECK(std::abs(metric_disk(scalar(w), dW) - 2 * 0.25 / std::pow(1 - std::norm(w), 2)) < 1e-14);

  // Pullback of the disk metric under the Cayley map equals the upper-half metric.
  const cplx z(0.7, 1.9), dz(0.2, 0.1);
  const cplx dc = 2.0 * kI / ((z + kI) * (z + kI)) * dz;
  CHECK(std::abs(metric_disk(scalar((z - kI) / (z + kI)), scalar(dc)) - metric_upper_half(scalar(z), scalar(dz))) <
        1e-13);
  // And the rank-1 Bergman metric from the kernel matches the same formula.
  Realization disk(catalog::disk());
  const double g = bergman_metric(disk, {scalar(z), ComplexMatrix(1, 0)}).G(0, 0).real();
  CHECK(std::abs(g * std::norm(dz) - metric_upper_half(scalar(z), scalar(dz))) < 1e-13);
}

TEST_CASE("distance on Siegel disks") {
  CounterRng rng(4, 0);
  const ComplexMatrix W = random_disk_point(2, rng);
  CHECK(distance_disk(W, W, 2) < 1e-12);

  const cplx a(0.3, 0.2), b(-0.5, 0.4);
  const double expected = std::sqrt(2.0) * std::atanh(std::abs((a - b) / (1.0 - std::conj(b) * a)));
  CHECK(std::abs(distance_disk(scalar(a), scalar(b), 1) - expected) < 1e-12);

  for (int n : {1, 2}) {
    for (int i = 0; i < 200; ++i) {
      const ComplexMatrix x = random_disk_point(n, rng), y = random_disk_point(n, rng), z = random_disk_point(n, rng);
      const double xy = distance_disk(x, y, n), yz = distance_disk(y, z, n), xz = distance_disk(x, z, n);
      CHECK(xz <= xy + yz + 1e-9);
      CHECK(std::abs(xy - distance_disk(y, x, n)) < 1e-9);
      const ComplexMatrix c = random_disk_point(n, rng);
      CHECK(std::abs(distance_disk(disk_automorphism(c, x), disk_automorphism(c, y), n) - xy) < 1e-8);
    }
  }
  CHECK_THROWS_AS(distance_disk(scalar(2.0), scalar(0.0), 1), DomainError);
  ComplexMatrix nonsym(2, 2);
  nonsym << 0.1, 0.2, 0.0, 0.1;
  CHECK_THROWS_AS(distance_disk(nonsym, ComplexMatrix::Zero(2, 2), 2), StructuralError);
}

TEST_CASE("disk distance scale matches numerical geodesics on U_2") {
  CounterRng rng(5, 0);
  const RealMetric metric = [](const RealVector& x) { return disk_metric_real(disk_from_real(x, 2)); };
  for (int i = 0; i < 3; ++i) {
    const ComplexMatrix a = random_disk_point(2, rng, 0.6), b = random_disk_point(2, rng, 0.6);
    const PathOracleResult res = geodesic_oracle(metric, disk_to_real(a), disk_to_real(b));
    CHECK(std::abs(res.length - distance_disk(a, b, 2)) < 1e-4 * distance_disk(a, b, 2));
  }
}

TEST_CASE("path bounds on the upper half plane") {
  Realization disk(catalog::disk());
  const ExponentData exps = exponent_data(disk.spec());
  const cplx z(0.3, 0.8), w(-0.6, 2.2);
  const SiegelPoint p{scalar(z), ComplexMatrix(1, 0)}, q{scalar(w), ComplexMatrix(1, 0)};
  const double exact = std::sqrt(2.0) * std::atanh(std::abs((z - w) / (z - std::conj(w))));
  const DistanceSample straight = distance_siegel_upper_bound(disk, exps, p, q, false);
  const DistanceSample opt = distance_siegel_upper_bound(disk, exps, p, q, true);
  CHECK(straight.distance >= exact * (1 - 1e-9));
  CHECK(opt.distance <= straight.distance);
  CHECK(std::abs(opt.distance - exact) < 1e-3 * exact);
  CHECK(distance_siegel_upper_bound(disk, exps, p, p).distance < 1e-12);
}

TEST_CASE("path bound is group invariant") {
  CounterRng rng(6, 0);
  for (const auto& [name, spec] : catalog::acceptance_domains()) {
    Realization r(spec);
    const ExponentData exps = exponent_data(spec);
    const SiegelPoint p = random_point(r, rng), q = random_point(r, rng);
    const GroupElement b = random_group_element(r, rng);
    const double d1 = distance_siegel_upper_bound(r, exps, p, q).distance;
    const double d2 = distance_siegel_upper_bound(r, exps, group_act(b, p), group_act(b, q)).distance;
    CHECK(std::abs(d1 - d2) < 1e-9 * std::max(1.0, d1));
  }
}

TEST_CASE("Lipschitz constants") {
  Realization disk(catalog::disk());
  CHECK(std::abs(lipschitz_M(disk, exponent_data(disk.spec()), 1) - 1.0) < 1e-12);
  Realization v(catalog::vinberg());
  const ExponentData ev = exponent_data(v.spec());
  const double expected[] = {0.5, 1.5, 2.0, 2.5};
  for (int n = 1; n <= 4; ++n) CHECK(std::abs(lipschitz_M(v, ev, n) - expected[n - 1]) < 1e-10);
}

TEST_CASE("pushforward metric inequality") {
  CounterRng rng(7, 0);
  for (const auto& [name, spec] : catalog::acceptance_domains()) {
    CAPTURE(name);
    Realization r(spec);
    const ExponentData exps = exponent_data(spec);
    for (int n = 1; n <= r.big_n(); ++n) {
      const double M = lipschitz_M(r, exps, n);
      for (int i = 0; i < 20; ++i) {
        const SiegelPoint p = random_point(r, rng, 1.0);
        const Tangent v = random_tangent(r, rng);
        const double lhs = metric_upper_half(phi_n(r, p, n).Z, jacobian_phi_n(r, p, n, v));
        const double rhs = bergman_metric(r, exps, p).value(r.coordinates(v));
        CHECK(lhs <= M * rhs + 1e-8 * std::max(1.0, rhs));
      }
    }
  }
}

TEST_CASE("disk ratio constants") {
  CHECK(disk_distance_scale(1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(disk_ratio_constant(1, 0.0) == doctest::Approx(1.0));
  CHECK(disk_ratio_constant(2, 1.0) > disk_ratio_constant(2, 0.5));
}

TEST_CASE("kernel ratio envelope experiment") {
  Realization sym2(catalog::sym(2));
  const EnvelopeReport rep = envelope_experiment(sym2, 1.0, 100, 42);
  CHECK(rep.pass);
  CHECK(rep.pairs == 100);
  CHECK(rep.min_ratio >= 1.0 / rep.bound);
  CHECK(rep.max_ratio <= rep.bound);
  CHECK(rep.max_disk_distance_excess <= 0.0);

  const EnvelopeReport small = envelope_experiment(sym2, 0.01, 50, 42);
  CHECK(small.max_ratio < 1.05);
  CHECK(small.min_ratio > 0.95);

  const EnvelopeReport again = envelope_experiment(sym2, 1.0, 100, 42);
  CHECK(again.max_ratio == rep.max_ratio);
  CHECK(again.min_ratio == rep.min_ratio);
}

TEST_CASE("near-diagonal far-field experiment") {
  Realization v(catalog::vinberg());
  const FarFieldReport rep = far_field_experiment(v, 0.5, 5, 500, 42);
  CHECK(rep.pass);
  CHECK(rep.base_row_deviation < 1e-12);
  CHECK(rep.max_abs / rep.min_abs <= rep.bound * rep.bound);
}
