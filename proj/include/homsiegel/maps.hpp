#pragma once

#include "homsiegel/triangular.hpp"

namespace homsiegel {

/// Point of the Siegel upper half plane D_n: complex symmetric, Im Z > 0.
struct UpperHalfPoint {
  ComplexMatrix Z;
};

/// Point of the Siegel disk U_n: complex symmetric, I - W conj(W) > 0.
struct DiskPoint {
  ComplexMatrix W;
};

bool in_upper_half(const ComplexMatrix& Z);
bool in_disk(const ComplexMatrix& W);

/// Element of B_n acting by Z -> T Z T^t + X (T lower triangular with
/// positive diagonal, X real symmetric). As a 2n x 2n symplectic matrix it
/// is [[I, X], [0, I]] diag(T, T^{-t}).
struct TriangularSymplectic {
  RealMatrix T;
  RealMatrix X;

  ComplexMatrix act(const ComplexMatrix& Z) const;
  RealMatrix matrix() const;
  TriangularSymplectic compose(const TriangularSymplectic& other) const;
};

/// Phi(Z, U) = [[i I_nu0, U^t], [U, Z - (i/2) U U^t]], an N x N point of D_N.
UpperHalfPoint phi_embed(const Realization& r, const SiegelPoint& p);

/// Leading n x n block.
UpperHalfPoint truncate(const UpperHalfPoint& Z, int n);
UpperHalfPoint phi_n(const Realization& r, const SiegelPoint& p, int n);

/// The homomorphism B -> B_N matching phi_embed equivariantly.
TriangularSymplectic phi_hom(const Realization& r, const GroupElement& b);
/// (T, X) -> (T^[n], X^[n]).
TriangularSymplectic rho_n(const TriangularSymplectic& beta, int n);
TriangularSymplectic phi_hom_n(const Realization& r, const GroupElement& b, int n);

/// (Z - iI)(Z + iI)^{-1}.
DiskPoint cayley(const UpperHalfPoint& Z);
/// i (I + W)(I - W)^{-1}.
UpperHalfPoint cayley_inverse(const DiskPoint& W);

/// theta_j = C_{n_j} ∘ Phi_{n_j}, with n_j = nu0 + mu_j.
DiskPoint theta(const Realization& r, const SiegelPoint& p, int j);

/// Differential of Phi_n at p applied to a tangent (dZ, dU):
/// [[0, dU^t], [dU, dZ - (i/2)(dU U^t + U dU^t)]] truncated to n x n.
ComplexMatrix jacobian_phi_n(const Realization& r, const SiegelPoint& p, int n, const Tangent& v);

}  // namespace homsiegel
