#pragma once

#include <span>
#include <vector>

#include "homsiegel/realization.hpp"

namespace homsiegel {

/// A complex number carried by its (branch-tracked) logarithm, so that powers
/// with negative exponents and products of many factors stay exact.
struct KernelValue {
  cplx log{0.0, 0.0};

  cplx value() const { return std::exp(log); }
  double abs() const { return std::exp(log.real()); }
  KernelValue operator*(const KernelValue& o) const { return {log + o.log}; }
  KernelValue operator/(const KernelValue& o) const { return {log - o.log}; }
  KernelValue pow(double p) const { return {p * log}; }
  KernelValue conj() const { return {std::conj(log)}; }
};

/// det Z^[m], the leading m x m minor; det Z^[0] = 1.
cplx principal_minor(const ComplexMatrix& Z, int m);

/// Pivots of Gaussian elimination without row exchanges. The m-th pivot is
/// det Z^[m] / det Z^[m-1]. Throws BranchError on a vanishing pivot.
std::vector<cplx> leading_pivots(const ComplexMatrix& Z);

/// True when (Z + Z^*)/2 is positive definite.
bool has_positive_real_part(const ComplexMatrix& Z);

/// log delta_j(Z) for j = 1..r, continued along the segment from I to Z.
/// Requires a positive-definite real part (DomainError otherwise).
std::vector<cplx> log_deltas(std::span<const int> nu, const ComplexMatrix& Z);
cplx log_delta(std::span<const int> nu, const ComplexMatrix& Z, int j);
KernelValue delta(std::span<const int> nu, const ComplexMatrix& Z, int j);

/// Q^s(Z) = delta_1(Z)^{s_1} ... delta_r(Z)^{s_r}.
KernelValue power_q(std::span<const int> nu, const ComplexMatrix& Z, std::span<const double> s);

/// log det Z^[m] for each requested order, continued along the segment from I.
std::vector<cplx> log_leading_minors(const ComplexMatrix& Z, std::span<const int> orders);

using IntTable = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// c_kj with delta_k = prod_{i<=k} (det^[mu_i])^{c_ki}; c_jj = 1,
/// c_{j+1,j} = -nu_j and c_{j+1,i} = (1 - nu_j) c_{j,i}.
IntTable exponent_c(std::span<const int> nu);

enum class ExponentConvention {
  /// e_k = 2 + sum_{i<k} dim V_ki + sum_{l>k} dim V_lk + dim_C W_k.
  calibrated,
  /// e_k = 2 (2 + sum dims) + dim_C W_k; kept for negative tests only.
  doubled,
};

struct ExponentData {
  IntTable c;
  std::vector<int> dims_v;
  std::vector<int> b;
  std::vector<long long> e;
  std::vector<long long> s;

  std::vector<double> e_real() const { return {e.begin(), e.end()}; }
  std::vector<double> s_real() const { return {s.begin(), s.end()}; }
};

ExponentData exponent_data(const RealizationSpec& spec,
                           ExponentConvention convention = ExponentConvention::calibrated);

}  // namespace homsiegel
