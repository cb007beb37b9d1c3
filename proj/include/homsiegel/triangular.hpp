#pragma once

#include "homsiegel/realization.hpp"

namespace homsiegel {

/// b(X, U, T): the affine transform
///   (Z', U') -> (T Z' T^t + X + 2i F(T U', U) + i F(U, U),  T U' + U)
/// of the split solvable group B. X lies in V, U in W and T in H.
struct GroupElement {
  RealMatrix X;
  ComplexMatrix U;
  RealMatrix T;
};

GroupElement group_identity(const Realization& r);

/// True when T is lower triangular with blocks t_kk I (t_kk > 0) on the
/// diagonal and block (l, k) in V_lk.
bool is_h_structured(const Realization& r, const RealMatrix& T, double tol = kMembershipTolerance);

/// The unique T in H with T T^t = X. Throws DomainError("not in cone") for X
/// outside Omega_V and StructuralError when the factor is not H-structured
/// (which only happens for specs violating the axioms).
RealMatrix h_cholesky(const Realization& r, const RealMatrix& X);
RealMatrix h_cholesky(const Realization& r, const ConeVector& x);

SiegelPoint group_act(const GroupElement& b, const SiegelPoint& p);

/// (b1 ∘ b2)·p = b1·(b2·p).
GroupElement group_compose(const GroupElement& b1, const GroupElement& b2);
GroupElement group_inverse(const GroupElement& b);

/// The group element carrying p0 to p; throws DomainError off the domain.
GroupElement to_basepoint(const Realization& r, const SiegelPoint& p);

}  // namespace homsiegel
