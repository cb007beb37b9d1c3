#include <doctest.h>

#include "homsiegel/minors.hpp"
#include "homsiegel/triangular.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<int> kVinbergNu{2, 1, 1};

ComplexMatrix random_right_half(const Realization& r, CounterRng& rng) {
  return random_cone_matrix(r, rng).cast<cplx>() + kI * random_v(r, rng).cast<cplx>();
}

}  // namespace

TEST_CASE("principal minors") {
  const ComplexMatrix X = vinberg_x(2, 3, 4, 1, 1).cast<cplx>();
  CHECK(principal_minor(X, 0) == cplx(1.0));
  CHECK(std::abs(principal_minor(X, 3) - 10.0) < 1e-12);
  for (int m = 0; m <= 4; ++m) CHECK(std::abs(principal_minor(ComplexMatrix::Identity(4, 4), m) - 1.0) < 1e-15);
}

TEST_CASE("Vinberg minor functions") {
  const double x1 = 2, x2 = 3, x3 = 4, x4 = 1, x5 = 1;
  const ComplexMatrix X = vinberg_x(x1, x2, x3, x4, x5).cast<cplx>();
  CHECK(std::abs(delta(kVinbergNu, X, 1).value() - x1) < 1e-13);
  CHECK(std::abs(delta(kVinbergNu, X, 2).value() - (x2 - x4 * x4 / x1)) < 1e-13);
  CHECK(std::abs(delta(kVinbergNu, X, 3).value() - (x3 - x5 * x5 / x1)) < 1e-13);
  const std::vector<double> ones{1, 1, 1};
  CHECK(std::abs(power_q(kVinbergNu, X, ones).value() - 17.5) < 1e-12);
  for (int j = 1; j <= 3; ++j) CHECK(std::abs(log_delta(kVinbergNu, ComplexMatrix::Identity(4, 4), j)) < 1e-15);
}

TEST_CASE("scalar matrices and the Sym(n) telescope") {
  const cplx c(0.7, 2.3);
  const ComplexMatrix Z = c * ComplexMatrix::Identity(4, 4);
  for (int j = 1; j <= 3; ++j) CHECK(std::abs(log_delta(kVinbergNu, Z, j) - std::log(c)) < 1e-13);

  Realization r(catalog::sym(3));
  const std::vector<int> nu{1, 1, 1};
  CounterRng rng(4, 0);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix W = random_right_half(r, rng);
    for (int k = 1; k <= 3; ++k) {
      const cplx expected = W.topLeftCorner(k, k).determinant() / W.topLeftCorner(k - 1, k - 1).determinant();
      CHECK(std::abs(delta(nu, W, k).value() - expected) < 1e-10 * std::abs(expected));
    }
    const std::vector<double> e{4, 4, 4};
    const cplx det4 = std::pow(W.determinant(), 4);
    CHECK(std::abs(power_q(nu, W, e).value() - det4) < 1e-10 * std::abs(det4));
  }
}

TEST_CASE("outside the continuation domain") {
  ComplexMatrix Z = ComplexMatrix::Identity(4, 4);
  Z(3, 3) = -1.0;
  CHECK_THROWS(log_deltas(kVinbergNu, Z));
}

TEST_CASE("delta equals squared Cholesky diagonal and is H-multiplicative") {
  Realization r(catalog::vinberg());
  CounterRng rng(8, 0);
  for (int i = 0; i < 50; ++i) {
    const RealMatrix X = random_cone_matrix(r, rng);
    const RealMatrix T = h_cholesky(r, X);
    const RealMatrix S = random_h(r, rng);
    const RealMatrix Y = S * X * S.transpose();
    for (int j = 1; j <= 3; ++j) {
      const int d = r.offset(j);
      const cplx ld = log_delta(kVinbergNu, X.cast<cplx>(), j);
      CHECK(std::abs(ld.imag()) < 1e-12);
      CHECK(std::abs(ld.real() - 2 * std::log(T(d, d))) < 1e-10);
      const cplx ly = log_delta(kVinbergNu, Y.cast<cplx>(), j);
      CHECK(std::abs(ly - ld - 2 * std::log(S(d, d))) < 1e-10);
    }
    // det X^[mu_k] = delta_1^{nu_1} ... delta_{k-1}^{nu_{k-1}} delta_k
    const auto logs = log_deltas(kVinbergNu, X.cast<cplx>());
    cplx acc = 0.0;
    for (int k = 1; k <= 3; ++k) {
      const cplx lhs = std::log(X.topLeftCorner(r.mu(k), r.mu(k)).determinant());
      CHECK(std::abs(lhs - (acc + logs[k - 1])) < 1e-10);
      acc += static_cast<double>(kVinbergNu[k - 1]) * logs[k - 1];
    }
  }
}

TEST_CASE("exponent_c tables") {
  const IntTable c = exponent_c(kVinbergNu);
  CHECK(c(0, 0) == 1);
  CHECK(c(1, 0) == -2);
  CHECK(c(2, 0) == 0);
  CHECK(c(2, 1) == -1);
  CHECK(c(2, 2) == 1);

  const std::vector<int> ones{1, 1, 1, 1};
  const IntTable c4 = exponent_c(ones);
  for (int k = 1; k < 4; ++k) {
    CHECK(c4(k, k - 1) == -1);
    for (int i = 0; i < k - 1; ++i) CHECK(c4(k, i) == 0);
  }
  const std::vector<int> one{1};
  CHECK(exponent_c(one)(0, 0) == 1);
}

TEST_CASE("delta from leading minors on complex points") {
  for (auto spec : {catalog::vinberg(), catalog::sym(3), catalog::lorentz(), catalog::rank2_type2()}) {
    Realization r(spec);
    const IntTable c = exponent_c(spec.nu);
    std::vector<int> orders;
    for (int k = 1; k <= r.rank(); ++k) orders.push_back(r.mu(k));
    CounterRng rng(12, 0);
    for (int i = 0; i < 30; ++i) {
      const ComplexMatrix W = random_right_half(r, rng);
      const auto deltas = log_deltas(spec.nu, W);
      const auto minors = log_leading_minors(W, orders);
      for (int k = 0; k < r.rank(); ++k) {
        cplx rhs = 0.0;
        for (int j = 0; j <= k; ++j) rhs += static_cast<double>(c(k, j)) * minors[j];
        CHECK(log_rel(deltas[k], rhs) < 1e-10);
      }
    }
  }
}

TEST_CASE("exponents") {
  CHECK(exponent_data(catalog::disk()).s == std::vector<long long>{2});
  CHECK(exponent_data(catalog::disk()).e == std::vector<long long>{2});
  CHECK(exponent_data(catalog::sym(2)).s == std::vector<long long>{0, 3});
  CHECK(exponent_data(catalog::sym(3)).s == std::vector<long long>{0, 0, 4});
  CHECK(exponent_data(catalog::sym(3)).e == std::vector<long long>{4, 4, 4});
  const ExponentData v = exponent_data(catalog::vinberg());
  CHECK(v.e == std::vector<long long>{4, 3, 3});
  CHECK(v.s == std::vector<long long>{-2, 0, 3});
  CHECK(exponent_data(catalog::ball()).s == std::vector<long long>{3});
  CHECK(exponent_data(catalog::disk(), ExponentConvention::doubled).e == std::vector<long long>{4});
}

TEST_CASE("exponents depend on dimensions only") {
  RealizationSpec spec = catalog::vinberg();
  spec.v_basis[{2, 1}][0] = RealMatrix{{3.0, 4.0}};
  spec.v_basis[{3, 1}][0] = RealMatrix{{-4.0, 3.0}};
  REQUIRE(validate_spec(spec).pass());
  CHECK(exponent_data(spec).s == exponent_data(catalog::vinberg()).s);
}
