#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "homsiegel/kernel.hpp"

namespace homsiegel {

// Monte-Carlo reference computations on bounded domains. Points live in R^{2m}
// and are read as complex coordinates z_k = x_{2k} + i x_{2k+1}.

using Indicator = std::function<bool(const RealVector&)>;

struct Box {
  std::vector<std::pair<double, double>> ranges;
  double volume() const;
  int dim() const { return static_cast<int>(ranges.size()); }
};

/// Samples drawn per random stream; stream c covers samples [c*kChunk, (c+1)*kChunk).
inline constexpr long kChunk = 4096;

struct VolumeEstimate {
  double volume = 0.0;
  double std_error = 0.0;
  long hits = 0;
  long samples = 0;
};

/// Hit ratio times box volume; throws NumericalError on zero hits.
VolumeEstimate mc_volume(const Indicator& inside, const Box& box, long samples, std::uint64_t seed);

/// Accepted samples of a box draw, in draw order.
struct SampleCloud {
  std::uint64_t seed = 0;
  long count = 0;             // box draws
  double weight = 0.0;        // box volume / count
  std::vector<RealVector> points;
};

SampleCloud sample_cloud(const Indicator& inside, const Box& box, long samples, std::uint64_t seed);

ComplexVector to_complex(const RealVector& x);

/// Exponent tuples of all monomials in `vars` variables of total degree <= degree,
/// ordered by degree and then lexicographically.
std::vector<std::vector<int>> monomial_exponents(int vars, int degree);
ComplexVector eval_monomials(const std::vector<std::vector<int>>& exps, const ComplexVector& z);

inline constexpr double kMaxGramCondition = 1e10;

/// Kernel of the span of low-degree monomials in L^2 of the domain, with
/// the Gram matrix estimated by Monte Carlo:
///   K(z, w) = m(z)^t G^{-1} conj(m(w)),  G_jk = int conj(m_j) m_k.
class MonteCarloKernel {
 public:
  MonteCarloKernel(const Indicator& inside, const Box& box, int degree, long samples, std::uint64_t seed);

  cplx operator()(const ComplexVector& z, const ComplexVector& w) const;
  int basis_size() const { return static_cast<int>(exps_.size()); }
  /// Condition number of the Jacobi-scaled Gram matrix.
  double condition() const { return condition_; }
  long hits() const { return hits_; }

 private:
  std::vector<std::vector<int>> exps_;
  ComplexMatrix gram_inverse_;
  double condition_ = 0.0;
  long hits_ = 0;
};

using KernelFunction = std::function<cplx(const ComplexVector&, const ComplexVector&)>;
using HolomorphicFunction = std::function<cplx(const ComplexVector&)>;

/// |MC estimate of int K(z, w) f(w) dV(w) - f(z)| / (1 + |f(z)|).
double reproducing_check(const KernelFunction& K, const HolomorphicFunction& f, const ComplexVector& z,
                         const Indicator& inside, const Box& box, long samples, std::uint64_t seed);

// Bounded test domains.
Indicator unit_disk_indicator();
Box unit_disk_box();
Indicator bidisk_indicator();
Box bidisk_box();
/// U_n in the coordinates (w_ij), i <= j, row by row.
Indicator siegel_disk_indicator(int n);
Box siegel_disk_box(int n);
ComplexMatrix siegel_disk_matrix(const ComplexVector& coords, int n);
ComplexVector siegel_disk_coords(const ComplexMatrix& W);

struct OracleKernelReport {
  std::string domain;
  int degree = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  int basis_size = 0;
  long hits = 0;
  double condition = 0.0;
  int test_pairs = 0;
  double max_rel_error = 0.0;
  cplx fitted_constant{1.0, 0.0};
  double tolerance = 0.0;
  bool pass = false;
};

/// Unit disk against (1/pi)(1 - z conj w)^{-2} for |z|, |w| <= 0.6; tolerance 2%.
OracleKernelReport oracle_kernel_disk(int degree, long samples, std::uint64_t seed);
/// Bidisk against pi^{-2} (1 - z1 conj w1)^{-2} (1 - z2 conj w2)^{-2}, including
/// the origin; tolerance 3%.
OracleKernelReport oracle_kernel_bidisk(int degree, long samples, std::uint64_t seed);

/// Tube over the cone of positive n x n matrices, Cayley-mapped onto U_n:
/// the MC kernel of U_n against k_minimal_product(C^{-1} W, C^{-1} W') up to
/// one fitted complex constant, on pairs with largest singular value <= 0.5;
/// tolerance 5%. Only full Sym(n) specs are supported.
OracleKernelReport oracle_kernel_spec_cayley(const RealizationSpec& spec, int degree, long samples,
                                             std::uint64_t seed,
                                             ExponentConvention convention = ExponentConvention::calibrated);

struct OracleVolumeReport {
  std::string domain;
  VolumeEstimate estimate;
  double exact = 0.0;
  double z_score = 0.0;
  bool pass = false;  // |estimate - exact| <= 4 standard errors
};

/// MC volume of "disk", "bidisk" or "u2" against pi, pi^2 and pi^3/6.
/// Throws StructuralError on other names.
OracleVolumeReport oracle_volume(const std::string& domain, long samples, std::uint64_t seed);

/// True for nu0 = 0, all nu_k = 1 and every V_lk one-dimensional.
bool is_full_symmetric_tube(const RealizationSpec& spec);

/// Bergman transformation law on the Siegel domain under B:
///   K(b p, b q) det J_b conj(det J_b) = K(p, q),
/// with det J_b from the action on coordinates. Returns the largest relative
/// residual over `samples` random (b, p, q).
double transformation_law_residual(const Realization& r, ExponentConvention convention, int samples,
                                   std::uint64_t seed);

}  // namespace homsiegel
