#include "homsiegel/realization.hpp"

#include <algorithm>
#include <sstream>

namespace homsiegel {
namespace {

const std::vector<RealMatrix> kEmptyV;

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> stack_columns(
    const std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& basis, Eigen::Index rows) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> A(rows, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    A.col(static_cast<Eigen::Index>(a)) =
        Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>(basis[a].data(), basis[a].size());
  }
  return A;
}

template <typename Scalar>
int numeric_rank(const std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& basis) {
  if (basis.empty()) return 0;
  const auto A = stack_columns(basis, basis.front().size());
  Eigen::JacobiSVD<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> svd(A);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-10 * sv(0)) ++rank;
  }
  return rank;
}

double scalar_identity_residual(const ComplexMatrix& M, double scale) {
  const Eigen::Index n = M.rows();
  if (n == 0) return 0.0;
  const cplx mean = M.trace() / static_cast<double>(n);
  const ComplexMatrix diff = M - mean * ComplexMatrix::Identity(n, n);
  // The scalar must be real as well.
  return (diff.norm() + std::abs(mean.imag())) / std::max(1.0, scale);
}

std::string block_name(int l, int k) {
  std::ostringstream os;
  os << "(" << l << "," << k << ")";
  return os.str();
}

}  // namespace

double span_residual(const std::vector<RealMatrix>& basis, const ComplexMatrix& M, double scale) {
  const double denom = std::max(1.0, scale);
  if (basis.empty()) return M.norm() / denom;
  const RealMatrix A = stack_columns(basis, M.size());
  Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(A);
  const ComplexVector m = Eigen::Map<const ComplexVector>(M.data(), M.size());
  const RealVector re = m.real();
  const RealVector im = m.imag();
  const double r_re = (A * cod.solve(re) - re).norm();
  const double r_im = (A * cod.solve(im) - im).norm();
  return std::hypot(r_re, r_im) / denom;
}

double span_residual(const std::vector<ComplexMatrix>& basis, const ComplexMatrix& M, double scale) {
  const double denom = std::max(1.0, scale);
  if (basis.empty()) return M.norm() / denom;
  const ComplexMatrix A = stack_columns(basis, M.size());
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(A);
  const ComplexVector m = Eigen::Map<const ComplexVector>(M.data(), M.size());
  return (A * cod.solve(m) - m).norm() / denom;
}

void check_structure(const RealizationSpec& spec) {
  const int r = static_cast<int>(spec.nu.size());
  if (r == 0) throw StructuralError("spec must have at least one block");
  if (spec.nu0 < 0) throw StructuralError("nu0 must be nonnegative");
  for (int k = 1; k <= r; ++k) {
    if (spec.nu[k - 1] <= 0) throw StructuralError("block sizes nu_k must be positive");
  }
  for (const auto& [key, basis] : spec.v_basis) {
    const auto [l, k] = key;
    if (!(1 <= k && k < l && l <= r)) {
      throw StructuralError("V block " + block_name(l, k) + " must satisfy 1 <= k < l <= r");
    }
    for (const auto& A : basis) {
      if (A.rows() != spec.nu[l - 1] || A.cols() != spec.nu[k - 1]) {
        throw StructuralError("V block " + block_name(l, k) + " basis element has wrong shape");
      }
    }
    if (numeric_rank(basis) != static_cast<int>(basis.size())) {
      throw StructuralError("V block " + block_name(l, k) + " basis is linearly dependent");
    }
  }
  if (!spec.w_basis.empty() && static_cast<int>(spec.w_basis.size()) != r) {
    throw StructuralError("W basis must list one (possibly empty) family per block");
  }
  for (std::size_t k = 0; k < spec.w_basis.size(); ++k) {
    const auto& basis = spec.w_basis[k];
    if (spec.nu0 == 0 && !basis.empty()) {
      throw StructuralError("tube type (nu0 = 0) requires every W_k to be empty");
    }
    for (const auto& C : basis) {
      if (C.rows() != spec.nu[k] || C.cols() != spec.nu0) {
        throw StructuralError("W block " + std::to_string(k + 1) + " basis element has wrong shape");
      }
    }
    if (numeric_rank(basis) != static_cast<int>(basis.size())) {
      throw StructuralError("W block " + std::to_string(k + 1) + " basis is linearly dependent");
    }
  }
}

Realization::Realization(RealizationSpec spec) : spec_(std::move(spec)) {
  check_structure(spec_);
  const int r = rank();
  if (spec_.w_basis.empty()) spec_.w_basis.resize(static_cast<std::size_t>(r));
  offsets_.resize(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    offsets_[static_cast<std::size_t>(k)] = nu_total_;
    nu_total_ += spec_.nu[static_cast<std::size_t>(k)];
  }
  const int n = nu_total_;

  for (int k = 1; k <= r; ++k) {
    RealMatrix E = RealMatrix::Zero(n, n);
    E.block(offset(k), offset(k), nu(k), nu(k)).setIdentity();
    v_space_.push_back(std::move(E));
  }
  for (int l = 2; l <= r; ++l) {
    for (int k = 1; k < l; ++k) {
      auto it = spec_.v_basis.find({l, k});
      if (it == spec_.v_basis.end()) continue;
      for (const auto& A : it->second) {
        RealMatrix E = RealMatrix::Zero(n, n);
        E.block(offset(l), offset(k), nu(l), nu(k)) = A;
        E.block(offset(k), offset(l), nu(k), nu(l)) = A.transpose();
        v_space_.push_back(std::move(E));
      }
    }
  }
  for (int k = 1; k <= r; ++k) {
    for (const auto& C : spec_.w_basis[static_cast<std::size_t>(k - 1)]) {
      ComplexMatrix E = ComplexMatrix::Zero(n, spec_.nu0);
      E.block(offset(k), 0, nu(k), spec_.nu0) = C;
      w_space_.push_back(std::move(E));
    }
  }
  v_solver_.compute(stack_columns(v_space_, static_cast<Eigen::Index>(n) * n));
  if (!w_space_.empty()) {
    w_solver_.compute(stack_columns(w_space_, static_cast<Eigen::Index>(n) * spec_.nu0));
  }
}

int Realization::dim_v_block(int l, int k) const {
  auto it = spec_.v_basis.find({l, k});
  return it == spec_.v_basis.end() ? 0 : static_cast<int>(it->second.size());
}

int Realization::dim_w_block(int k) const {
  return static_cast<int>(spec_.w_basis[static_cast<std::size_t>(k - 1)].size());
}

RealMatrix Realization::materialize(const ConeVector& x) const {
  if (x.coords.size() != dim_v()) throw StructuralError("cone vector has wrong number of coordinates");
  RealMatrix X = RealMatrix::Zero(nu_total_, nu_total_);
  for (int a = 0; a < dim_v(); ++a) X += x.coords(a) * v_space_[static_cast<std::size_t>(a)];
  return X;
}

ComplexMatrix Realization::materialize_v(const ComplexVector& coords) const {
  if (coords.size() != dim_v()) throw StructuralError("V coordinate vector has wrong length");
  ComplexMatrix Z = ComplexMatrix::Zero(nu_total_, nu_total_);
  for (int a = 0; a < dim_v(); ++a) Z += coords(a) * v_space_[static_cast<std::size_t>(a)].cast<cplx>();
  return Z;
}

ComplexMatrix Realization::materialize_w(const ComplexVector& coords) const {
  if (coords.size() != dim_w()) throw StructuralError("W coordinate vector has wrong length");
  ComplexMatrix U = ComplexMatrix::Zero(nu_total_, spec_.nu0);
  for (int b = 0; b < dim_w(); ++b) U += coords(b) * w_space_[static_cast<std::size_t>(b)];
  return U;
}

ComplexVector Realization::v_coordinates(const ComplexMatrix& Z) const {
  if (Z.rows() != nu_total_ || Z.cols() != nu_total_) throw StructuralError("Z has wrong shape");
  const ComplexVector z = Eigen::Map<const ComplexVector>(Z.data(), Z.size());
  const RealVector re = z.real();
  const RealVector im = z.imag();
  ComplexVector c(dim_v());
  c.real() = v_solver_.solve(re);
  c.imag() = v_solver_.solve(im);
  return c;
}

ComplexVector Realization::w_coordinates(const ComplexMatrix& U) const {
  if (U.rows() != nu_total_ || U.cols() != spec_.nu0) throw StructuralError("U has wrong shape");
  if (w_space_.empty()) return ComplexVector(0);
  const ComplexVector u = Eigen::Map<const ComplexVector>(U.data(), U.size());
  return w_solver_.solve(u);
}

double Realization::v_residual(const ComplexMatrix& Z) const {
  const ComplexVector c = v_coordinates(Z);
  return (materialize_v(c) - Z).norm() / std::max(1.0, Z.norm());
}

double Realization::w_residual(const ComplexMatrix& U) const {
  const ComplexVector c = w_coordinates(U);
  return (materialize_w(c) - U).norm() / std::max(1.0, U.norm());
}

ConeVector Realization::cone_coordinates(const RealMatrix& X) const {
  const ComplexMatrix Xc = X.cast<cplx>();
  if (v_residual(Xc) > kMembershipTolerance) throw StructuralError("matrix does not lie in V");
  return ConeVector{v_coordinates(Xc).real()};
}

bool Realization::is_structured(const SiegelPoint& p) const {
  if (p.Z.rows() != nu_total_ || p.Z.cols() != nu_total_) return false;
  if (p.U.rows() != nu_total_ || p.U.cols() != spec_.nu0) return false;
  return v_residual(p.Z) <= kMembershipTolerance && w_residual(p.U) <= kMembershipTolerance;
}

SiegelPoint Realization::point(const ComplexVector& coords) const {
  if (coords.size() != dim()) throw StructuralError("point coordinate vector has wrong length");
  return SiegelPoint{materialize_v(coords.head(dim_v())), materialize_w(coords.tail(dim_w()))};
}

ComplexVector Realization::coordinates(const SiegelPoint& p) const {
  ComplexVector c(dim());
  c.head(dim_v()) = v_coordinates(p.Z);
  c.tail(dim_w()) = w_coordinates(p.U);
  return c;
}

SiegelPoint Realization::base_point() const {
  return SiegelPoint{kI * ComplexMatrix::Identity(nu_total_, nu_total_),
                     ComplexMatrix::Zero(nu_total_, spec_.nu0)};
}

SiegelPoint Realization::zero_tangent() const {
  return SiegelPoint{ComplexMatrix::Zero(nu_total_, nu_total_), ComplexMatrix::Zero(nu_total_, spec_.nu0)};
}

ValidationReport validate_spec(const RealizationSpec& spec) {
  check_structure(spec);
  const int r = static_cast<int>(spec.nu.size());
  auto V = [&](int l, int k) -> const std::vector<RealMatrix>& {
    auto it = spec.v_basis.find({l, k});
    return it == spec.v_basis.end() ? kEmptyV : it->second;
  };
  static const std::vector<ComplexMatrix> kEmptyW;
  auto W = [&](int k) -> const std::vector<ComplexMatrix>& {
    return spec.w_basis.empty() ? kEmptyW : spec.w_basis[static_cast<std::size_t>(k - 1)];
  };
  auto complexified = [](const std::vector<RealMatrix>& basis) {
    std::vector<ComplexMatrix> out;
    for (const auto& A : basis) out.push_back(A.cast<cplx>());
    return out;
  };

  ValidationReport report;
  auto check = [&](const char* axiom, std::vector<int> indices, double residual) {
    if (residual > kMembershipTolerance) report.violations.push_back({axiom, std::move(indices), residual});
  };

  for (int l = 1; l <= r; ++l) {
    for (int k = 1; k < l; ++k) {
      for (int i = 1; i < k; ++i) {
        // (V1) V_lk V_ki ⊂ V_li
        for (std::size_t a = 0; a < V(l, k).size(); ++a) {
          for (std::size_t b = 0; b < V(k, i).size(); ++b) {
            const RealMatrix& A = V(l, k)[a];
            const RealMatrix& B = V(k, i)[b];
            check("V1", {l, k, i, int(a), int(b)},
                  span_residual(V(l, i), (A * B).cast<cplx>(), A.norm() * B.norm()));
          }
        }
        // (V2) V_li V_ki^t ⊂ V_lk
        for (std::size_t a = 0; a < V(l, i).size(); ++a) {
          for (std::size_t b = 0; b < V(k, i).size(); ++b) {
            const RealMatrix& A = V(l, i)[a];
            const RealMatrix& B = V(k, i)[b];
            check("V2", {l, k, i, int(a), int(b)},
                  span_residual(V(l, k), (A * B.transpose()).cast<cplx>(), A.norm() * B.norm()));
          }
        }
      }
      // (V3) A A^t ∈ R I, polarized over basis pairs.
      const auto& basis = V(l, k);
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a; b < basis.size(); ++b) {
          const RealMatrix P = basis[a] * basis[b].transpose() + basis[b] * basis[a].transpose();
          check("V3", {l, k, int(a), int(b)},
                scalar_identity_residual(P.cast<cplx>(), basis[a].norm() * basis[b].norm()));
        }
      }
    }
  }

  if (spec.nu0 > 0) {
    for (int l = 1; l <= r; ++l) {
      for (int k = 1; k < l; ++k) {
        // (W1) V_lk W_k ⊂ W_l
        for (std::size_t a = 0; a < V(l, k).size(); ++a) {
          for (std::size_t c = 0; c < W(k).size(); ++c) {
            const RealMatrix& A = V(l, k)[a];
            const ComplexMatrix& C = W(k)[c];
            check("W1", {l, k, int(a), int(c)}, span_residual(W(l), A.cast<cplx>() * C, A.norm() * C.norm()));
          }
        }
        // (W2) W_l conj(W_k)^t ⊂ (V_lk)_C, checked for every pair k < l.
        const auto Vc = complexified(V(l, k));
        for (std::size_t a = 0; a < W(l).size(); ++a) {
          for (std::size_t b = 0; b < W(k).size(); ++b) {
            const ComplexMatrix& C = W(l)[a];
            const ComplexMatrix& D = W(k)[b];
            check("W2", {l, k, int(a), int(b)}, span_residual(Vc, C * D.adjoint(), C.norm() * D.norm()));
          }
        }
      }
      // (W3) C conj(C)^t + conj(C) C^t ∈ R I. The map is real quadratic, so
      // polarization needs both Re(P + P^*) and Im(P - P^*) with P = C_a C_b^*.
      const auto& basis = W(l);
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a; b < basis.size(); ++b) {
          const ComplexMatrix P = basis[a] * basis[b].adjoint();
          const double scale = basis[a].norm() * basis[b].norm();
          const ComplexMatrix sym = (P + P.adjoint()).real().cast<cplx>();
          const ComplexMatrix anti = (P - P.adjoint()).imag().cast<cplx>();
          const double res = std::max(scalar_identity_residual(sym, scale), scalar_identity_residual(anti, scale));
          check("W3", {l, int(a), int(b)}, res);
        }
      }
    }
  }
  return report;
}

bool cone_contains(const RealMatrix& X) {
  if (X.rows() == 0) return true;
  if ((X - X.transpose()).norm() > 1e-12 * std::max(1.0, X.norm())) return false;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(X, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  if (scale == 0.0) return false;
  return ev.minCoeff() > 1e-12 * scale;
}

bool cone_contains(const Realization& r, const ConeVector& x) { return cone_contains(r.materialize(x)); }

ComplexMatrix hermitian_form(const ComplexMatrix& U, const ComplexMatrix& Uprime) {
  return (U * Uprime.adjoint() + Uprime.conjugate() * U.transpose()) / 4.0;
}

RealMatrix cone_part(const SiegelPoint& p) {
  return p.Z.imag() - hermitian_form(p.U, p.U).real();
}

bool in_domain(const Realization& r, const SiegelPoint& p) {
  if (p.Z.rows() != r.nu_total() || p.U.rows() != r.nu_total() || p.U.cols() != r.nu0()) {
    throw StructuralError("point shape does not match the realization");
  }
  return cone_contains(cone_part(p));
}

}  // namespace homsiegel
