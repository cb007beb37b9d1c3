#include "homsiegel/sampling.hpp"

#include <cmath>

namespace homsiegel {
namespace {

double log_uniform(CounterRng& rng, double decades) {
  const double mag = std::pow(10.0, rng.uniform(-decades, decades));
  return rng.uniform() < 0.5 ? -mag : mag;
}

}  // namespace

RealMatrix random_v(const Realization& r, CounterRng& rng, double scale) {
  ConeVector x{RealVector(r.dim_v())};
  for (int a = 0; a < r.dim_v(); ++a) x.coords(a) = scale * rng.normal();
  return r.materialize(x);
}

ComplexMatrix random_w(const Realization& r, CounterRng& rng, double scale) {
  ComplexVector c(r.dim_w());
  for (int b = 0; b < r.dim_w(); ++b) c(b) = scale * cplx(rng.normal(), rng.normal());
  return r.materialize_w(c);
}

RealMatrix random_h(const Realization& r, CounterRng& rng, double spread) {
  const int n = r.nu_total();
  RealMatrix T = RealMatrix::Zero(n, n);
  for (int k = 1; k <= r.rank(); ++k) {
    const double t = std::exp(spread * rng.normal());
    T.block(r.offset(k), r.offset(k), r.nu(k), r.nu(k)) = t * RealMatrix::Identity(r.nu(k), r.nu(k));
  }
  for (const auto& [key, basis] : r.spec().v_basis) {
    const auto [l, k] = key;
    for (const auto& A : basis) T.block(r.offset(l), r.offset(k), r.nu(l), r.nu(k)) += spread * rng.normal() * A;
  }
  return T;
}

RealMatrix random_cone_matrix(const Realization& r, CounterRng& rng, double spread) {
  const RealMatrix T = random_h(r, rng, spread);
  return T * T.transpose();
}

GroupElement random_group_element(const Realization& r, CounterRng& rng, double spread) {
  return GroupElement{random_v(r, rng, spread), random_w(r, rng, spread), random_h(r, rng, spread)};
}

SiegelPoint random_point(const Realization& r, CounterRng& rng, double spread) {
  return group_act(random_group_element(r, rng, spread), r.base_point());
}

Tangent random_tangent(const Realization& r, CounterRng& rng) {
  ComplexVector c(r.dim());
  for (int a = 0; a < r.dim(); ++a) c(a) = cplx(rng.normal(), rng.normal());
  return r.point(c);
}

GroupElement random_far_group_element(const Realization& r, CounterRng& rng, double decades) {
  const int n = r.nu_total();
  GroupElement b = group_identity(r);
  b.T.setZero();
  for (int k = 1; k <= r.rank(); ++k) {
    const double t = std::pow(10.0, rng.uniform(-decades, decades));
    b.T.block(r.offset(k), r.offset(k), r.nu(k), r.nu(k)) = t * RealMatrix::Identity(r.nu(k), r.nu(k));
  }
  ConeVector x{RealVector(r.dim_v())};
  for (int a = 0; a < r.dim_v(); ++a) x.coords(a) = log_uniform(rng, decades);
  b.X = r.materialize(x);
  int a = r.rank();
  for (const auto& [key, basis] : r.spec().v_basis) {
    const auto [l, k] = key;
    for (const auto& A : basis) {
      b.T.block(r.offset(l), r.offset(k), r.nu(l), r.nu(k)) += log_uniform(rng, decades) * A;
      ++a;
    }
  }
  ComplexVector u(r.dim_w());
  for (int c = 0; c < r.dim_w(); ++c) u(c) = cplx(log_uniform(rng, decades), log_uniform(rng, decades));
  b.U = r.materialize_w(u);
  (void)n;
  return b;
}

}  // namespace homsiegel
