#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "homsiegel/kernel.hpp"
#include "homsiegel/random.hpp"

namespace homsiegel {

/// Bergman metric of the domain at `base` as a Hermitian matrix G in the
/// complex coordinates of Realization::coordinates: the squared length of a
/// tangent with coordinates v is v^* G v.
struct MetricForm {
  SiegelPoint base;
  ComplexMatrix G;

  double value(const ComplexVector& v) const { return (v.adjoint() * G * v)(0, 0).real(); }
};

/// Complex Hessian of log K(p, p) from the minor expansion of the kernel.
/// Throws NumericalError("metric degenerate") if G is not positive definite.
MetricForm bergman_metric(const Realization& r, const ExponentData& exps, const SiegelPoint& p);
MetricForm bergman_metric(const Realization& r, const SiegelPoint& p);

inline constexpr double kMetricStep = 1e-4;

/// The same Hessian by central differences of log K(p, p) in real
/// coordinates, one Richardson extrapolation. The step is kMetricStep times
/// sqrt(lambda_min lambda_max) of the cone part Im Z - F(U, U).
MetricForm bergman_metric_fd(const Realization& r, const ExponentData& exps, const SiegelPoint& p);

/// Metric of D_n from det((Z - conj Z')/2i)^{-(n+1)}:
/// (n+1)/4 tr(Y^{-1} dZ Y^{-1} conj(dZ2)) with Y = Im Z.
cplx metric_upper_half(const ComplexMatrix& Z, const ComplexMatrix& dZ, const ComplexMatrix& dZ2);
double metric_upper_half(const ComplexMatrix& Z, const ComplexMatrix& dZ);

/// Metric of U_n from det(I - W conj W')^{-(n+1)}:
/// (n+1) tr((I - W conj W)^{-1} dW (I - conj W W)^{-1} conj(dW)).
double metric_disk(const ComplexMatrix& W, const ComplexMatrix& dW);

/// The automorphism of U_n sending W to 0, evaluated at Z:
/// (I - W conj W)^{-1/2} (Z - W)(I - conj W Z)^{-1} (I - conj W W)^{1/2}.
ComplexMatrix disk_automorphism(const ComplexMatrix& W, const ComplexMatrix& Z);

/// Bergman distance scale on U_n: d(0, V diag(l) V^t) = kappa_n |arctanh(l)|.
double disk_distance_scale(int n);

/// Bergman distance on U_n via the automorphism to 0 and the Takagi values
/// (singular values) of the image. Throws StructuralError on non-symmetric
/// or mis-sized input and DomainError outside U_n.
double distance_disk(const ComplexMatrix& W, const ComplexMatrix& Wprime, int n);

/// Riemannian metric on R^d as a function returning the SPD Gram matrix.
using RealMetric = std::function<RealMatrix(const RealVector&)>;

struct PathOracleResult {
  double length = 0.0;
  double length_coarse = 0.0;  // same construction with half the segments
  int iterations = 0;
};

/// Numerical geodesic between a and b: the discrete path energy over
/// `segments` pieces (midpoint rule) is minimized by Gauss-Newton steps with
/// the metric frozen per step, starting from 2 segments and doubling. The
/// reported length is Richardson-extrapolated from the last two levels.
PathOracleResult geodesic_oracle(const RealMetric& metric, const RealVector& a, const RealVector& b,
                                 int segments = 64);

/// Real Gram matrix of the disk metric in the coordinates
/// (Re w_ij, Im w_ij) over i <= j.
RealMatrix disk_metric_real(const ComplexMatrix& W);
RealVector disk_to_real(const ComplexMatrix& W);
ComplexMatrix disk_from_real(const RealVector& x, int n);

enum class DistanceMethod { closed_form, path_upper_bound, optimized_path };

struct DistanceSample {
  SiegelPoint first;
  SiegelPoint second;
  double distance = 0.0;
  DistanceMethod method = DistanceMethod::path_upper_bound;
};

inline constexpr int kQuadratureNodes = 64;
inline constexpr int kPathModes = 4;
inline constexpr int kSimplexIterations = 200;

/// Upper bound on the Bergman distance: the metric length of the straight
/// segment from p0 to b^{-1} q, where b carries p0 to p. With `optimize`,
/// the segment is deformed by kPathModes sine modes whose coefficients are
/// tuned by a downhill simplex, and the shorter of the two is returned.
DistanceSample distance_siegel_upper_bound(const Realization& r, const ExponentData& exps, const SiegelPoint& p,
                                           const SiegelPoint& q, bool optimize = false);

/// Largest generalized eigenvalue of (Phi_n^* Bmet_{D_n})_{p0} against
/// (Bmet_D)_{p0}: the constant in Bmet_{D_n}(Phi_n p; dPhi_n X) <= M_n Bmet_D(p; X).
/// Distances contract by at most sqrt(M_n).
double lipschitz_M(const Realization& r, const ExponentData& exps, int n);

struct EnvelopeReport {
  double rho = 0.0;
  int pairs = 0;
  int candidates = 0;
  std::uint64_t seed = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double bound = 0.0;                  // C_rho
  std::vector<double> lipschitz;       // M_{n_j}
  std::vector<double> disk_constant;   // C_j, closed form
  std::vector<double> disk_sampled;    // largest |K(w,a)/K(a,a)|^{+-1} seen on U_{n_j}
  double max_disk_distance_excess = 0.0;  // max over pairs of d_j - sqrt(M_j) rho (should be <= 0)
  bool pass = false;
};

/// Disk constant on U_n: |K(w,a)/K(a,a)|^{+-1} <= (1 - tanh(R / kappa_n))^{-(n+1)}
/// whenever the distance between w and a is at most R.
double disk_ratio_constant(int n, double radius);

/// C_rho = prod_j C_j^{|s_j|/(n_j+1)} with C_j = disk_ratio_constant(n_j, sqrt(M_{n_j}) rho).
double envelope_constant(const Realization& r, const ExponentData& exps, double rho);

EnvelopeReport envelope_experiment(const Realization& r, double rho, int samples, std::uint64_t seed);

struct FarFieldReport {
  double rho = 0.0;
  int z_samples = 0;
  int w_samples = 0;
  std::uint64_t seed = 0;
  double min_abs = 0.0;
  double max_abs = 0.0;
  double bound = 0.0;             // M = C_rho
  double base_row_deviation = 0.0;  // max |K(p0, w) - 1|
  bool pass = false;
};

inline constexpr double kFarFieldDecades = 3.0;

FarFieldReport far_field_experiment(const Realization& r, double rho, int z_samples, int w_samples,
                               std::uint64_t seed);

/// Candidate point at metric distance about `radius` from p0 along a random
/// direction; used to sample near-diagonal pairs.
SiegelPoint sample_near_base(const Realization& r, const MetricForm& g0, CounterRng& rng, double radius);

}  // namespace homsiegel
