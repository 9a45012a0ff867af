#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace qdot::numkit {

template <typename Scalar>
using SymMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct SymEigenResult {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;   // ascending
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;  // columns; empty unless requested
};

/// True when M(i,j) == M(j,i) bit for bit.
template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < m.rows(); ++i) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

/// The k smallest eigenvalues of a dense symmetric matrix, ascending, with
/// the matching eigenvectors when asked for. Householder tridiagonalization
/// followed by implicit symmetric QR.
template <typename Derived>
SymEigenResult<typename Derived::Scalar> sym_eigen(const Eigen::MatrixBase<Derived>& m, Eigen::Index k,
                                                   bool with_vectors = false) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("sym_eigen: matrix is not square");
  if (k < 1 || k > m.rows()) throw std::invalid_argument("sym_eigen: need 1 <= k <= dimension");
  SymMatrix<Scalar> dense = m;
  Eigen::SelfAdjointEigenSolver<SymMatrix<Scalar>> solver(
      dense, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("sym_eigen: iteration did not converge");
  SymEigenResult<Scalar> out;
  out.values = solver.eigenvalues().head(k);
  if (with_vectors) out.vectors = solver.eigenvectors().leftCols(k);
  return out;
}

}  // namespace qdot::numkit
