#pragma once

#include "homsiegel/random.hpp"
#include "homsiegel/triangular.hpp"

namespace homsiegel {

// Random structured objects for property tests and experiments. `spread`
// controls log-scale of diagonal entries and the size of off-diagonal and
// translation coefficients.

RealMatrix random_v(const Realization& r, CounterRng& rng, double scale = 1.0);
ComplexMatrix random_w(const Realization& r, CounterRng& rng, double scale = 1.0);
RealMatrix random_h(const Realization& r, CounterRng& rng, double spread = 0.5);
RealMatrix random_cone_matrix(const Realization& r, CounterRng& rng, double spread = 0.5);
GroupElement random_group_element(const Realization& r, CounterRng& rng, double spread = 0.5);
/// b·p0 for a random group element b.
SiegelPoint random_point(const Realization& r, CounterRng& rng, double spread = 0.5);
/// Random (dZ, dU) with complex Gaussian coordinates.
Tangent random_tangent(const Realization& r, CounterRng& rng);

/// Random group element whose coefficients are log-uniform in
/// [10^-decades, 10^decades] with random signs.
GroupElement random_far_group_element(const Realization& r, CounterRng& rng, double decades);

}  // namespace homsiegel
