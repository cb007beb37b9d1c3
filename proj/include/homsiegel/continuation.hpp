#pragma once

#include <functional>
#include <span>
#include <vector>

#include "homsiegel/types.hpp"

namespace homsiegel {

/// Evaluates f_1(t) .. f_m(t) into the output vector (resized by the callee).
using PathFunctions = std::function<void(double t, std::vector<cplx>& values)>;

inline constexpr int kContinuationInitialSegments = 8;
inline constexpr int kContinuationMaxSegments = 1 << 14;

/// Continuous logarithms of nonvanishing functions along t in [0, 1].
///
/// Starts from `start_logs` (logarithms of f(0)) on a uniform grid of 8
/// segments and bisects any segment across which some argument jumps by
/// pi/2 or more. The returned logarithm has real part log|f(1)| and
/// imaginary part arg f(1) plus the tracked winding. Throws BranchError if a
/// value vanishes or more than 2^14 segments are needed.
std::vector<cplx> track_logs(const PathFunctions& f, std::span<const cplx> start_logs);

}  // namespace homsiegel
