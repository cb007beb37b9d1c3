#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace homsiegel {

using cplx = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong dimensions, dependent bases, non-symmetric matrices.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A point or matrix lies outside the set an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Logarithm continuation could not resolve the branch.
class BranchError : public Error {
 public:
  using Error::Error;
};

// Degenerate metric, ill-conditioned Gram matrix, empty sample set.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace homsiegel
