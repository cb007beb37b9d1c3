#include <doctest.h>

#include "homsiegel/minors.hpp"
#include "homsiegel/triangular.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("h_cholesky examples") {
  Realization sym2(catalog::sym(2));
  CHECK(rel(h_cholesky(sym2, RealMatrix::Identity(2, 2)), RealMatrix::Identity(2, 2)) < 1e-15);

  RealMatrix X(2, 2);
  X << 2, 1, 1, 1;
  RealMatrix T(2, 2);
  T << std::sqrt(2.0), 0, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  CHECK(rel(h_cholesky(sym2, X), T) < 1e-14);

  Realization v(catalog::vinberg());
  const RealMatrix Tv = h_cholesky(v, vinberg_x(2, 3, 4, 1, 1));
  CHECK(std::abs(Tv(0, 0) - std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(Tv(1, 1) - std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(Tv(2, 2) - std::sqrt(2.5)) < 1e-14);
  CHECK(std::abs(Tv(3, 3) - std::sqrt(3.5)) < 1e-14);
  CHECK(std::abs(Tv(2, 0) - 1 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(Tv(2, 1)) < 1e-14);
  CHECK(std::abs(Tv(3, 0)) < 1e-14);
  CHECK(std::abs(Tv(3, 1) - 1 / std::sqrt(2.0)) < 1e-14);
  CHECK(is_h_structured(v, Tv));

  CHECK_THROWS_AS(h_cholesky(v, vinberg_x(1, 1, 1, 2, 0)), DomainError);
}

TEST_CASE("h_cholesky round trip and cone transitivity") {
  Realization r(catalog::vinberg());
  CounterRng rng(11, 0);
  for (int i = 0; i < 50; ++i) {
    const RealMatrix T = random_h(r, rng);
    CHECK(rel(h_cholesky(r, T * T.transpose()), T) < 1e-10);
    const RealMatrix X1 = random_cone_matrix(r, rng);
    const RealMatrix X2 = random_cone_matrix(r, rng);
    const RealMatrix T1 = h_cholesky(r, X1);
    const RealMatrix T2 = h_cholesky(r, X2);
    const RealMatrix S = T2 * T1.inverse();
    CHECK(rel(S * X1 * S.transpose(), X2) < 1e-10);
  }
}

TEST_CASE("group action formulas") {
  Realization r(catalog::ball());
  CounterRng rng(3, 0);
  const SiegelPoint zeta = random_point(r, rng);
  const SiegelPoint same = group_act(group_identity(r), zeta);
  CHECK(rel(same.Z, zeta.Z) < 1e-15);

  const GroupElement b = random_group_element(r, rng);
  const SiegelPoint image = group_act(b, r.base_point());
  const ComplexMatrix expected =
      kI * (b.T * b.T.transpose()).cast<cplx>() + b.X.cast<cplx>() + kI * hermitian_form(b.U, b.U);
  CHECK(rel(image.Z, expected) < 1e-13);
  CHECK(rel(image.U, b.U) < 1e-15);

  Realization tube(catalog::vinberg());
  const GroupElement bt = random_group_element(tube, rng);
  const SiegelPoint z = random_point(tube, rng);
  const ComplexMatrix tz = bt.T.cast<cplx>() * z.Z * bt.T.transpose().cast<cplx>() + bt.X.cast<cplx>();
  CHECK(rel(group_act(bt, z).Z, tz) < 1e-13);

  const GroupElement inv = group_inverse(bt);
  const RealMatrix Tinv = bt.T.inverse();
  CHECK(rel(inv.T, Tinv) < 1e-12);
  CHECK(rel(inv.X, RealMatrix(-Tinv * bt.X * Tinv.transpose())) < 1e-12);
}

TEST_CASE("composition, inverse and domain preservation") {
  for (const auto& [name, spec] : catalog::acceptance_domains()) {
    CAPTURE(name);
    Realization r(spec);
    CounterRng rng(5, 1);
    for (int i = 0; i < 100; ++i) {
      const GroupElement b1 = random_group_element(r, rng);
      const GroupElement b2 = random_group_element(r, rng);
      const SiegelPoint z = random_point(r, rng);
      const SiegelPoint lhs = group_act(group_compose(b1, b2), z);
      const SiegelPoint rhs = group_act(b1, group_act(b2, z));
      CHECK(rel(lhs.Z, rhs.Z) < 1e-10);
      CHECK(rel(lhs.U, rhs.U) < 1e-10);
      CHECK(in_domain(r, rhs));
      const GroupElement e = group_compose(b1, group_inverse(b1));
      CHECK(rel(e.T, RealMatrix::Identity(r.nu_total(), r.nu_total())) < 1e-10);
      CHECK(e.X.norm() < 1e-9 * std::max(1.0, b1.X.norm()));
    }
  }
}

TEST_CASE("to_basepoint") {
  Realization ball(catalog::ball());
  const SiegelPoint zeta{scalar({1.0, 1.0}), scalar(1.0)};
  const GroupElement b = to_basepoint(ball, zeta);
  CHECK(std::abs(b.X(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(b.U(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(b.T(0, 0) * b.T(0, 0) - 0.5) < 1e-15);

  const GroupElement id = to_basepoint(ball, ball.base_point());
  CHECK(std::abs(id.T(0, 0) - 1.0) < 1e-15);
  CHECK(id.X.norm() == 0.0);

  for (const auto& [name, spec] : catalog::acceptance_domains()) {
    Realization r(spec);
    CounterRng rng(9, 0);
    for (int i = 0; i < 50; ++i) {
      const SiegelPoint p = random_point(r, rng, 1.0);
      const SiegelPoint back = group_act(to_basepoint(r, p), r.base_point());
      CHECK(rel(back.Z, p.Z) < 1e-10);
    }
  }
  CHECK_THROWS_AS(to_basepoint(ball, {scalar({0.0, 1.0}), scalar(2.0)}), DomainError);
}

TEST_CASE("action is affine") {
  Realization r(catalog::ball());
  CounterRng rng(21, 0);
  const GroupElement b = random_group_element(r, rng);
  const SiegelPoint p = random_point(r, rng), q = random_point(r, rng);
  const SiegelPoint v = random_tangent(r, rng);
  const double h = 1e-3;
  auto diff = [&](const SiegelPoint& x) {
    const SiegelPoint a = group_act(b, {x.Z + h * v.Z, x.U + h * v.U});
    const SiegelPoint c = group_act(b, x);
    return SiegelPoint{(a.Z - c.Z) / h, (a.U - c.U) / h};
  };
  const SiegelPoint dp = diff(p), dq = diff(q);
  CHECK(rel(dp.Z, dq.Z) < 1e-8);
  CHECK(rel(dp.U, dq.U) < 1e-8);
}
