#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dgfrft {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Precondition or argument violation on an otherwise well-formed call.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mismatched sizes between a graph, signal, spectrum or kernel.
class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Malformed graph or signal file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical routine did not reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

inline void require_same_size(Index a, Index b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": size " + std::to_string(a) +
                            " does not match " + std::to_string(b));
  }
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// ‖A − A^H‖_max
inline double hermitian_defect(const CMatrix& a) {
  return max_abs(a - a.adjoint());
}

/// ‖M^H M − I‖_max
inline double unitarity_defect(const CMatrix& m) {
  return max_abs(m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols()));
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(std::abs(m(i, j)))) return false;
  return true;
}

}  // namespace dgfrft
