#pragma once

#include <cmath>

#include "homsiegel/catalog.hpp"
#include "homsiegel/random.hpp"
#include "homsiegel/sampling.hpp"

namespace testing {

using namespace homsiegel;

inline double rel(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

inline double rel(const RealMatrix& a, const RealMatrix& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

// Relative distance of two kernel values compared through their logs.
inline double log_rel(cplx la, cplx lb) { return std::abs(std::exp(la - lb) - 1.0); }

// Vinberg cone point with coordinates (x1, ..., x5).
inline RealMatrix vinberg_x(double x1, double x2, double x3, double x4, double x5) {
  RealMatrix X = RealMatrix::Zero(4, 4);
  X(0, 0) = X(1, 1) = x1;
  X(2, 2) = x2;
  X(3, 3) = x3;
  X(2, 0) = X(0, 2) = x4;
  X(3, 1) = X(1, 3) = x5;
  return X;
}

inline ComplexMatrix scalar(cplx z) { return ComplexMatrix::Constant(1, 1, z); }

}  // namespace testing
