#include <doctest.h>

#include "homsiegel/io.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("catalog specs pass validation") {
  for (auto spec : {catalog::disk(), catalog::sym(2), catalog::sym(3), catalog::vinberg(), catalog::ball(),
                    catalog::rank2_type2(), catalog::lorentz()}) {
    const auto report = validate_spec(spec);
    CHECK(report.pass());
  }
}

TEST_CASE("column-space block violates V3") {
  const auto report = validate_spec(catalog::bad_v3());
  REQUIRE_FALSE(report.pass());
  for (const auto& v : report.violations) CHECK(v.axiom == "V3");
}

TEST_CASE("structural errors") {
  RealizationSpec spec = catalog::vinberg();
  spec.v_basis[{2, 1}].push_back(spec.v_basis[{2, 1}][0]);
  CHECK_THROWS_AS(Realization{spec}, StructuralError);

  spec = catalog::vinberg();
  spec.v_basis[{2, 1}][0] = RealMatrix::Ones(2, 2);
  CHECK_THROWS_AS(validate_spec(spec), StructuralError);
}

TEST_CASE("dimensions and offsets") {
  Realization r(catalog::vinberg());
  CHECK(r.rank() == 3);
  CHECK(r.nu_total() == 4);
  CHECK(r.dim_v() == 5);
  CHECK(r.dim() == 5);
  CHECK(r.mu(1) == 1);
  CHECK(r.mu(2) == 3);
  CHECK(r.mu(3) == 4);
  CHECK(r.n_j(3) == 4);

  Realization b(catalog::ball());
  CHECK(b.big_n() == 2);
  CHECK(b.dim_w() == 1);
  CHECK(b.n_j(1) == 2);
}

TEST_CASE("cone coordinates round trip") {
  Realization r(catalog::vinberg());
  const RealMatrix X = vinberg_x(2, 3, 4, 1, 1);
  const ConeVector x = r.cone_coordinates(X);
  RealVector expected(5);
  expected << 2, 3, 4, 1, 1;
  CHECK((x.coords - expected).norm() < 1e-12);
  CHECK(rel(r.materialize(x), X) < 1e-14);
  CHECK(cone_contains(r, x));
  CHECK_FALSE(cone_contains(vinberg_x(1, 1, 1, 2, 0)));
  CHECK_THROWS_AS(r.cone_coordinates(RealMatrix::Ones(4, 4)), StructuralError);
}

TEST_CASE("point coordinates round trip and membership") {
  for (const auto& [name, spec] : catalog::acceptance_domains()) {
    CAPTURE(name);
    Realization r(spec);
    CounterRng rng(7, 0);
    for (int i = 0; i < 20; ++i) {
      const SiegelPoint p = random_point(r, rng);
      CHECK(r.is_structured(p));
      CHECK(in_domain(r, p));
      const SiegelPoint q = r.point(r.coordinates(p));
      CHECK(rel(q.Z, p.Z) < 1e-12);
      CHECK(rel(q.U, p.U) < 1e-12);
    }
    CHECK(in_domain(r, r.base_point()));
  }
}

TEST_CASE("hermitian form") {
  const ComplexMatrix U = scalar({1.0, 2.0});
  const ComplexMatrix F = hermitian_form(U, U);
  CHECK(std::abs(F(0, 0) - cplx(2.5, 0.0)) < 1e-15);
  Realization r(catalog::ball());
  CHECK_FALSE(in_domain(r, {scalar({0.0, 1.0}), scalar(2.0)}));
  CHECK(in_domain(r, {scalar({1.0, 1.0}), scalar(1.0)}));
}

TEST_CASE("spec json round trip") {
  for (auto spec : {catalog::vinberg(), catalog::ball(), catalog::rank2_type2()}) {
    const RealizationSpec back = spec_from_json(json::parse(spec_to_json(spec).dump()));
    CHECK(back.nu0 == spec.nu0);
    CHECK(back.nu == spec.nu);
    CHECK(back.v_basis.size() == spec.v_basis.size());
    CHECK(validate_spec(back).pass());
  }
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"nu0": 0})")), StructuralError);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"nu": [1, 1], "V": {"21": []}})")), StructuralError);
  CHECK_THROWS_AS(load_spec("/nonexistent/spec.json"), IoError);
}
