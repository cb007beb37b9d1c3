#pragma once

#include "homsiegel/maps.hpp"
#include "homsiegel/minors.hpp"

namespace homsiegel {

// Every kernel here is unnormalized: the Siegel-domain constant is taken to
// be 1 and the 1/Vol(U) factor of the minimal-domain kernel is dropped. All
// identities and estimates built on top are ratios in which both cancel.

enum class KernelForm { ratio, product, siegel, disk };

struct KernelReport {
  KernelValue value;
  KernelForm form = KernelForm::ratio;
  SiegelPoint first;
  SiegelPoint second;
};

/// (Z - conj(Z'))/2i - F(U, U'); its real part is positive definite on
/// in-domain pairs.
ComplexMatrix kernel_arg(const SiegelPoint& p, const SiegelPoint& q);

enum class SiegelRoute {
  /// Q^{-e} through the minor functions delta_j.
  power_q,
  /// prod_j (det^[mu_j])^{-s_j}.
  minors,
};

/// Bergman kernel of the Siegel domain, Q^{-e}(kernel_arg(p, q)).
KernelValue k_siegel(const Realization& r, const ExponentData& exps, const SiegelPoint& p, const SiegelPoint& q,
                     SiegelRoute route = SiegelRoute::power_q);
KernelValue k_siegel(const Realization& r, const SiegelPoint& p, const SiegelPoint& q,
                     SiegelRoute route = SiegelRoute::power_q);

/// Pulled-back minimal-domain kernel as a ratio of Siegel kernels:
///   K(p, q) K(p0, p0) / (K(p, p0) K(p0, q)).
KernelValue k_minimal_ratio(const Realization& r, const ExponentData& exps, const SiegelPoint& p,
                            const SiegelPoint& q);
KernelValue k_minimal_ratio(const Realization& r, const SiegelPoint& p, const SiegelPoint& q);

/// The same kernel as prod_j det(I - theta_j(p) conj(theta_j(q)))^{-s_j}; each
/// logarithm is continued from q = p, where the determinant is positive.
KernelValue k_minimal_product(const Realization& r, const ExponentData& exps, const SiegelPoint& p,
                              const SiegelPoint& q);
KernelValue k_minimal_product(const Realization& r, const SiegelPoint& p, const SiegelPoint& q);

/// det(I - W conj(W'))^{-(n+1)}, the Siegel disk kernel of U_n.
KernelValue k_siegel_disk(const ComplexMatrix& W, const ComplexMatrix& Wprime, int n);

/// K(p1,p2) K(p3,p4) / (K(p1,p4) K(p3,p2)) with the Siegel kernel.
KernelValue cross_ratio(const Realization& r, const SiegelPoint& p1, const SiegelPoint& p2, const SiegelPoint& p3,
                        const SiegelPoint& p4);

KernelReport evaluate_kernel(const Realization& r, const SiegelPoint& p, const SiegelPoint& q, KernelForm form);

}  // namespace homsiegel
