#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homsiegel/types.hpp"

namespace homsiegel {

/// Block data of a homogeneous Siegel domain in matrix realization.
///
/// Blocks are indexed from 1 as in the usual notation: `nu[k-1]` is the size
/// of block k, `v_basis[{l, k}]` (l > k) spans the real subspace of
/// nu_l x nu_k matrices sitting in block (l, k), and `w_basis[k-1]` spans the
/// complex subspace of nu_k x nu0 matrices sitting in block row k of U.
/// With nu0 == 0 the domain is of tube type and every W_k is empty.
struct RealizationSpec {
  int nu0 = 0;
  std::vector<int> nu;
  std::map<std::pair<int, int>, std::vector<RealMatrix>> v_basis;
  std::vector<std::vector<ComplexMatrix>> w_basis;
};

/// Element of V in structured coordinates: the r diagonal scalars followed by
/// the V_lk coefficients for (l, k) = (2,1), (3,1), (3,2), (4,1), ...
struct ConeVector {
  RealVector coords;
};

/// (Z, U) with Z in V_C (nu x nu complex symmetric) and U in W (nu x nu0).
/// Tangent vectors use the same representation.
struct SiegelPoint {
  ComplexMatrix Z;
  ComplexMatrix U;
};
using Tangent = SiegelPoint;

/// A structurally checked RealizationSpec with materialized bases of V and W
/// and cached projections used for coordinate extraction.
///
/// Construction only checks shapes and linear independence; the axioms are
/// checked by validate_spec().
class Realization {
 public:
  explicit Realization(RealizationSpec spec);

  const RealizationSpec& spec() const { return spec_; }

  int rank() const { return static_cast<int>(spec_.nu.size()); }
  int nu0() const { return spec_.nu0; }
  int nu(int k) const { return spec_.nu[k - 1]; }
  /// nu_1 + ... + nu_r.
  int nu_total() const { return nu_total_; }
  /// nu0 + nu_total().
  int big_n() const { return spec_.nu0 + nu_total_; }
  /// 0-based row offset of block k inside a nu x nu matrix.
  int offset(int k) const { return offsets_[k - 1]; }
  /// mu_j = nu_1 + ... + nu_{j-1} + 1.
  int mu(int j) const { return offsets_[j - 1] + 1; }
  /// n_j = nu0 + mu_j, the size of the j-th Siegel disk.
  int n_j(int j) const { return spec_.nu0 + mu(j); }

  bool is_tube() const { return dim_w() == 0; }
  int dim_v_block(int l, int k) const;
  int dim_w_block(int k) const;
  /// Real dimension of V.
  int dim_v() const { return static_cast<int>(v_space_.size()); }
  /// Complex dimension of W.
  int dim_w() const { return static_cast<int>(w_space_.size()); }
  /// Complex dimension of the domain.
  int dim() const { return dim_v() + dim_w(); }

  const std::vector<RealMatrix>& v_space_basis() const { return v_space_; }
  const std::vector<ComplexMatrix>& w_space_basis() const { return w_space_; }

  RealMatrix materialize(const ConeVector& x) const;
  ComplexMatrix materialize_v(const ComplexVector& coords) const;
  ComplexMatrix materialize_w(const ComplexVector& coords) const;

  /// Least-squares coordinates; throws StructuralError when the relative
  /// residual exceeds 1e-10.
  ConeVector cone_coordinates(const RealMatrix& X) const;
  ComplexVector v_coordinates(const ComplexMatrix& Z) const;
  ComplexVector w_coordinates(const ComplexMatrix& U) const;

  double v_residual(const ComplexMatrix& Z) const;
  double w_residual(const ComplexMatrix& U) const;
  /// True when Z lies in V_C and U in W (shapes included).
  bool is_structured(const SiegelPoint& p) const;

  SiegelPoint point(const ComplexVector& coords) const;
  ComplexVector coordinates(const SiegelPoint& p) const;

  /// p0 = (i I, 0).
  SiegelPoint base_point() const;
  SiegelPoint zero_tangent() const;

 private:
  RealizationSpec spec_;
  int nu_total_ = 0;
  std::vector<int> offsets_;
  std::vector<RealMatrix> v_space_;
  std::vector<ComplexMatrix> w_space_;
  Eigen::CompleteOrthogonalDecomposition<RealMatrix> v_solver_;
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> w_solver_;
};

struct AxiomViolation {
  std::string axiom;         // "V1" ... "W3"
  std::vector<int> indices;  // block indices followed by basis indices
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
};

inline constexpr double kMembershipTolerance = 1e-10;

/// Relative least-squares residual of M against the span of `basis`, scaled
/// by max(1, scale).
double span_residual(const std::vector<RealMatrix>& basis, const ComplexMatrix& M, double scale);
double span_residual(const std::vector<ComplexMatrix>& basis, const ComplexMatrix& M, double scale);

/// Checks shapes (throws StructuralError) and then every axiom on basis
/// elements, collecting violations.
ValidationReport validate_spec(const RealizationSpec& spec);

/// Shape and linear-independence checks only; throws StructuralError.
void check_structure(const RealizationSpec& spec);

bool cone_contains(const Realization& r, const ConeVector& x);
/// Positive-definiteness test on a materialized symmetric matrix.
bool cone_contains(const RealMatrix& X);

/// F(U, U') = (U conj(U')^t + conj(U') U^t) / 4.
ComplexMatrix hermitian_form(const ComplexMatrix& U, const ComplexMatrix& Uprime);

/// Im Z - F(U, U), the cone part of a point.
RealMatrix cone_part(const SiegelPoint& p);

bool in_domain(const Realization& r, const SiegelPoint& p);

}  // namespace homsiegel
