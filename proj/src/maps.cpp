#include "homsiegel/maps.hpp"

namespace homsiegel {
namespace {

ComplexMatrix symmetrize(const ComplexMatrix& A) { return 0.5 * (A + A.transpose()); }

}  // namespace

bool in_upper_half(const ComplexMatrix& Z) {
  if (Z.rows() != Z.cols()) return false;
  if ((Z - Z.transpose()).norm() > 1e-10 * std::max(1.0, Z.norm())) return false;
  return cone_contains(RealMatrix(Z.imag()));
}

bool in_disk(const ComplexMatrix& W) {
  if (W.rows() != W.cols()) return false;
  if ((W - W.transpose()).norm() > 1e-10 * std::max(1.0, W.norm())) return false;
  if (W.rows() == 0) return true;
  Eigen::JacobiSVD<ComplexMatrix> svd(W);
  return svd.singularValues()(0) < 1.0;
}

ComplexMatrix TriangularSymplectic::act(const ComplexMatrix& Z) const {
  const ComplexMatrix Tc = T.cast<cplx>();
  return Tc * Z * Tc.transpose() + X.cast<cplx>();
}

RealMatrix TriangularSymplectic::matrix() const {
  const Eigen::Index n = T.rows();
  const RealMatrix Tinv_t =
      T.triangularView<Eigen::Lower>().solve(RealMatrix::Identity(n, n)).transpose();
  RealMatrix M = RealMatrix::Zero(2 * n, 2 * n);
  M.topLeftCorner(n, n) = T;
  M.topRightCorner(n, n) = X * Tinv_t;
  M.bottomRightCorner(n, n) = Tinv_t;
  return M;
}

TriangularSymplectic TriangularSymplectic::compose(const TriangularSymplectic& other) const {
  return {T * other.T, T * other.X * T.transpose() + X};
}

UpperHalfPoint phi_embed(const Realization& r, const SiegelPoint& p) {
  const int n0 = r.nu0();
  const int nu = r.nu_total();
  ComplexMatrix M(n0 + nu, n0 + nu);
  M.topLeftCorner(n0, n0) = kI * ComplexMatrix::Identity(n0, n0);
  M.topRightCorner(n0, nu) = p.U.transpose();
  M.bottomLeftCorner(nu, n0) = p.U;
  M.bottomRightCorner(nu, nu) = p.Z - 0.5 * kI * p.U * p.U.transpose();
  return {M};
}

UpperHalfPoint truncate(const UpperHalfPoint& Z, int n) {
  if (n < 1 || n > Z.Z.rows()) throw StructuralError("truncation order out of range");
  return {Z.Z.topLeftCorner(n, n)};
}

UpperHalfPoint phi_n(const Realization& r, const SiegelPoint& p, int n) { return truncate(phi_embed(r, p), n); }

TriangularSymplectic phi_hom(const Realization& r, const GroupElement& b) {
  const int n0 = r.nu0();
  const int nu = r.nu_total();
  const int N = n0 + nu;
  TriangularSymplectic out{RealMatrix::Zero(N, N), RealMatrix::Zero(N, N)};
  out.T.topLeftCorner(n0, n0).setIdentity();
  out.T.bottomLeftCorner(nu, n0) = b.U.imag();
  out.T.bottomRightCorner(nu, nu) = b.T;
  out.X.topRightCorner(n0, nu) = b.U.real().transpose();
  out.X.bottomLeftCorner(nu, n0) = b.U.real();
  out.X.bottomRightCorner(nu, nu) = b.X + 0.5 * (b.U * b.U.transpose()).imag();
  return out;
}

TriangularSymplectic rho_n(const TriangularSymplectic& beta, int n) {
  if (n < 1 || n > beta.T.rows()) throw StructuralError("truncation order out of range");
  return {beta.T.topLeftCorner(n, n), beta.X.topLeftCorner(n, n)};
}

TriangularSymplectic phi_hom_n(const Realization& r, const GroupElement& b, int n) {
  return rho_n(phi_hom(r, b), n);
}

DiskPoint cayley(const UpperHalfPoint& Z) {
  const Eigen::Index n = Z.Z.rows();
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  Eigen::PartialPivLU<ComplexMatrix> lu(Z.Z + kI * Id);
  if (lu.determinant() == 0.0) throw DomainError("Z + iI is singular");
  // Z - iI and (Z + iI)^{-1} commute.
  return {symmetrize(lu.solve(Z.Z - kI * Id))};
}

UpperHalfPoint cayley_inverse(const DiskPoint& W) {
  const Eigen::Index n = W.W.rows();
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  Eigen::PartialPivLU<ComplexMatrix> lu(Id - W.W);
  if (lu.determinant() == 0.0) throw DomainError("I - W is singular");
  return {symmetrize(kI * lu.solve(Id + W.W))};
}

DiskPoint theta(const Realization& r, const SiegelPoint& p, int j) {
  if (j < 1 || j > r.rank()) throw StructuralError("theta index out of range");
  return cayley(phi_n(r, p, r.n_j(j)));
}

ComplexMatrix jacobian_phi_n(const Realization& r, const SiegelPoint& p, int n, const Tangent& v) {
  const int n0 = r.nu0();
  const int nu = r.nu_total();
  ComplexMatrix M = ComplexMatrix::Zero(n0 + nu, n0 + nu);
  M.topRightCorner(n0, nu) = v.U.transpose();
  M.bottomLeftCorner(nu, n0) = v.U;
  M.bottomRightCorner(nu, nu) = v.Z - 0.5 * kI * (v.U * p.U.transpose() + p.U * v.U.transpose());
  if (n < 1 || n > n0 + nu) throw StructuralError("truncation order out of range");
  return M.topLeftCorner(n, n);
}

}  // namespace homsiegel
