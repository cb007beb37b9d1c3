#include "homsiegel/kernel.hpp"

#include "homsiegel/continuation.hpp"

namespace homsiegel {
namespace {

SiegelPoint lerp(const SiegelPoint& a, const SiegelPoint& b, double t) {
  return {(1.0 - t) * a.Z + t * b.Z, (1.0 - t) * a.U + t * b.U};
}

cplx log_det_hermitian_pd(const ComplexMatrix& H) {
  Eigen::LLT<ComplexMatrix> llt(H);
  if (llt.info() != Eigen::Success) throw DomainError("expected a positive-definite matrix on the diagonal");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < H.rows(); ++i) acc += 2.0 * std::log(llt.matrixL()(i, i).real());
  return acc;
}

}  // namespace

ComplexMatrix kernel_arg(const SiegelPoint& p, const SiegelPoint& q) {
  return (p.Z - q.Z.conjugate()) / (2.0 * kI) - hermitian_form(p.U, q.U);
}

KernelValue k_siegel(const Realization& r, const ExponentData& exps, const SiegelPoint& p, const SiegelPoint& q,
                     SiegelRoute route) {
  const ComplexMatrix A = kernel_arg(p, q);
  if (route == SiegelRoute::power_q) {
    std::vector<double> minus_e;
    for (long long e : exps.e) minus_e.push_back(-static_cast<double>(e));
    return power_q(r.spec().nu, A, minus_e);
  }
  std::vector<int> orders;
  for (int j = 1; j <= r.rank(); ++j) orders.push_back(r.mu(j));
  const auto logs = log_leading_minors(A, orders);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < logs.size(); ++j) {
    if (exps.s[j] != 0) acc -= static_cast<double>(exps.s[j]) * logs[j];
  }
  return {acc};
}

KernelValue k_siegel(const Realization& r, const SiegelPoint& p, const SiegelPoint& q, SiegelRoute route) {
  return k_siegel(r, exponent_data(r.spec()), p, q, route);
}

KernelValue k_minimal_ratio(const Realization& r, const ExponentData& exps, const SiegelPoint& p,
                            const SiegelPoint& q) {
  const SiegelPoint p0 = r.base_point();
  // K(p0, p0) has argument I and contributes log 1 = 0.
  return k_siegel(r, exps, p, q) / (k_siegel(r, exps, p, p0) * k_siegel(r, exps, p0, q));
}

KernelValue k_minimal_ratio(const Realization& r, const SiegelPoint& p, const SiegelPoint& q) {
  return k_minimal_ratio(r, exponent_data(r.spec()), p, q);
}

KernelValue k_minimal_product(const Realization& r, const ExponentData& exps, const SiegelPoint& p,
                              const SiegelPoint& q) {
  std::vector<int> active;
  for (int j = 1; j <= r.rank(); ++j) {
    if (exps.s[static_cast<std::size_t>(j - 1)] != 0) active.push_back(j);
  }
  if (active.empty()) return {};

  std::vector<ComplexMatrix> theta_p;
  std::vector<cplx> start;
  for (int j : active) {
    const ComplexMatrix W = theta(r, p, j).W;
    const Eigen::Index n = W.rows();
    start.push_back(log_det_hermitian_pd(ComplexMatrix::Identity(n, n) - W * W.adjoint()));
    theta_p.push_back(W);
  }
  const auto logs = track_logs(
      [&](double t, std::vector<cplx>& out) {
        const SiegelPoint qt = lerp(p, q, t);
        out.resize(active.size());
        for (std::size_t a = 0; a < active.size(); ++a) {
          const ComplexMatrix Wq = theta(r, qt, active[a]).W;
          const Eigen::Index n = Wq.rows();
          out[a] = (ComplexMatrix::Identity(n, n) - theta_p[a] * Wq.conjugate()).determinant();
        }
      },
      start);
  cplx acc = 0.0;
  for (std::size_t a = 0; a < active.size(); ++a) {
    acc -= static_cast<double>(exps.s[static_cast<std::size_t>(active[a] - 1)]) * logs[a];
  }
  return {acc};
}

KernelValue k_minimal_product(const Realization& r, const SiegelPoint& p, const SiegelPoint& q) {
  return k_minimal_product(r, exponent_data(r.spec()), p, q);
}

KernelValue k_siegel_disk(const ComplexMatrix& W, const ComplexMatrix& Wprime, int n) {
  if (W.rows() != n || W.cols() != n || Wprime.rows() != n || Wprime.cols() != n) {
    throw StructuralError("disk points must be n x n");
  }
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  const std::vector<cplx> start{log_det_hermitian_pd(Id - W * W.adjoint())};
  const auto logs = track_logs(
      [&](double t, std::vector<cplx>& out) {
        const ComplexMatrix Wt = (1.0 - t) * W + t * Wprime;
        out.assign(1, (Id - W * Wt.conjugate()).determinant());
      },
      start);
  return {-static_cast<double>(n + 1) * logs[0]};
}

KernelValue cross_ratio(const Realization& r, const SiegelPoint& p1, const SiegelPoint& p2, const SiegelPoint& p3,
                        const SiegelPoint& p4) {
  const ExponentData exps = exponent_data(r.spec());
  return k_siegel(r, exps, p1, p2) * k_siegel(r, exps, p3, p4) /
         (k_siegel(r, exps, p1, p4) * k_siegel(r, exps, p3, p2));
}

KernelReport evaluate_kernel(const Realization& r, const SiegelPoint& p, const SiegelPoint& q, KernelForm form) {
  KernelReport report{{}, form, p, q};
  switch (form) {
    case KernelForm::ratio:
      report.value = k_minimal_ratio(r, p, q);
      break;
    case KernelForm::product:
      report.value = k_minimal_product(r, p, q);
      break;
    case KernelForm::siegel:
      report.value = k_siegel(r, p, q);
      break;
    case KernelForm::disk:
      throw StructuralError("disk kernels take disk points; use k_siegel_disk");
  }
  return report;
}

}  // namespace homsiegel
