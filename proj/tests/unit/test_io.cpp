#include <doctest.h>

#include "homsiegel/io.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("matrix encodings") {
  const json j = json::parse(R"([[1, [0, 2]], [[3, -1], 4.5]])");
  const ComplexMatrix M = complex_matrix_from_json(j);
  CHECK(M(0, 0) == cplx(1, 0));
  CHECK(M(0, 1) == cplx(0, 2));
  CHECK(M(1, 0) == cplx(3, -1));
  CHECK(complex_matrix_from_json(complex_matrix_to_json(M)) == M);
  CHECK_THROWS_AS(complex_matrix_from_json(json::parse(R"([[1, 2], [3]])")), StructuralError);
  CHECK_THROWS_AS(real_matrix_from_json(json::parse(R"([["a"]])")), StructuralError);
}

TEST_CASE("point pairs") {
  Realization r(catalog::ball());
  CounterRng rng(1, 0);
  std::vector<PointPair> pairs;
  for (int i = 0; i < 3; ++i) pairs.push_back({random_point(r, rng), random_point(r, rng)});
  const auto back = pairs_from_json(json::parse(pairs_to_json(pairs).dump()), r);
  REQUIRE(back.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(back[i].zeta.Z == pairs[i].zeta.Z);
    CHECK(back[i].eta.U == pairs[i].eta.U);
  }
  const json outside = json::parse(R"([{"zeta": {"Z": [[[0, 1]]], "U": [[2]]}, "eta": {"Z": [[[0, 1]]], "U": [[0]]}}])");
  CHECK_THROWS_AS(pairs_from_json(outside, r), DomainError);
  const json missing = json::parse(R"([{"zeta": {"Z": [[[0, 1]]]}}])");
  CHECK_THROWS_AS(pairs_from_json(missing, r), StructuralError);
}

TEST_CASE("reports serialize") {
  const json e = to_json(exponent_data(catalog::vinberg()));
  CHECK(e["s"] == json::array({-2, 0, 3}));
  CHECK(e["c"][1][0] == -2);
  const json v = to_json(validate_spec(catalog::bad_v3()));
  CHECK(v["pass"] == false);
  CHECK(v["violations"][0]["axiom"] == "V3");
}
