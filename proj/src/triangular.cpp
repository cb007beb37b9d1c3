#include "homsiegel/triangular.hpp"

#include <cmath>

namespace homsiegel {

GroupElement group_identity(const Realization& r) {
  const int n = r.nu_total();
  return GroupElement{RealMatrix::Zero(n, n), ComplexMatrix::Zero(n, r.nu0()), RealMatrix::Identity(n, n)};
}

bool is_h_structured(const Realization& r, const RealMatrix& T, double tol) {
  const int n = r.nu_total();
  if (T.rows() != n || T.cols() != n) return false;
  const double scale = std::max(1.0, T.norm());
  if (T.triangularView<Eigen::StrictlyUpper>().toDenseMatrix().norm() > tol * scale) return false;
  for (int k = 1; k <= r.rank(); ++k) {
    const auto block = T.block(r.offset(k), r.offset(k), r.nu(k), r.nu(k));
    const double t = block(0, 0);
    if (!(t > 0.0)) return false;
    if ((block - t * RealMatrix::Identity(r.nu(k), r.nu(k))).norm() > tol * scale) return false;
    for (int l = k + 1; l <= r.rank(); ++l) {
      const RealMatrix off = T.block(r.offset(l), r.offset(k), r.nu(l), r.nu(k));
      auto it = r.spec().v_basis.find({l, k});
      const std::vector<RealMatrix> none;
      const auto& basis = it == r.spec().v_basis.end() ? none : it->second;
      if (span_residual(basis, off.cast<cplx>(), scale) > tol) return false;
    }
  }
  return true;
}

RealMatrix h_cholesky(const Realization& r, const RealMatrix& X) {
  if (!cone_contains(X)) throw DomainError("not in cone");
  Eigen::LLT<RealMatrix> llt(X);
  if (llt.info() != Eigen::Success) throw DomainError("not in cone");
  RealMatrix T = llt.matrixL();
  if (!is_h_structured(r, T, 1e-8)) {
    throw StructuralError("Cholesky factor is not H-structured; the realization violates its axioms");
  }
  return T;
}

RealMatrix h_cholesky(const Realization& r, const ConeVector& x) { return h_cholesky(r, r.materialize(x)); }

SiegelPoint group_act(const GroupElement& b, const SiegelPoint& p) {
  const ComplexMatrix T = b.T.cast<cplx>();
  const ComplexMatrix TU = T * p.U;
  SiegelPoint out;
  out.Z = T * p.Z * T.transpose() + b.X.cast<cplx>() + 2.0 * kI * hermitian_form(TU, b.U) +
          kI * hermitian_form(b.U, b.U);
  out.U = TU + b.U;
  return out;
}

GroupElement group_compose(const GroupElement& b1, const GroupElement& b2) {
  // Substituting the action of b2 into that of b1 and regrouping by
  // T Z T^t + X + 2i F(T U', U) + i F(U, U) gives
  //   T = T1 T2,  U = T1 U2 + U1,  X = X1 + T1 X2 T1^t - 2 Im F(T1 U2, U1).
  const ComplexMatrix T1U2 = b1.T.cast<cplx>() * b2.U;
  GroupElement out;
  out.T = b1.T * b2.T;
  out.U = T1U2 + b1.U;
  out.X = b1.X + b1.T * b2.X * b1.T.transpose() - 2.0 * hermitian_form(T1U2, b1.U).imag();
  return out;
}

GroupElement group_inverse(const GroupElement& b) {
  const Eigen::Index n = b.T.rows();
  const RealMatrix Tinv = b.T.triangularView<Eigen::Lower>().solve(RealMatrix::Identity(n, n));
  GroupElement out;
  out.T = Tinv;
  out.U = -Tinv.cast<cplx>() * b.U;
  out.X = -Tinv * b.X * Tinv.transpose();
  return out;
}

GroupElement to_basepoint(const Realization& r, const SiegelPoint& p) {
  if (!in_domain(r, p)) throw DomainError("point is not in the domain");
  RealMatrix Y = cone_part(p);
  Y = 0.5 * (Y + Y.transpose());
  RealMatrix X = p.Z.real();
  X = 0.5 * (X + X.transpose());
  return GroupElement{X, p.U, h_cholesky(r, Y)};
}

}  // namespace homsiegel
