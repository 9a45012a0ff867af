#pragma once

// Sine discrete variable representation on the box [-R, R]^2 with N
// intervals per axis: grid points x_i = -R + 2R i/N, i = 1..N-1, and
// Dirichlet walls at +-R.

#include <vector>

#include <Eigen/Dense>

#include "qdot/model.hpp"

namespace qdot::dvr {

struct DvrGrid {
  double R = 0.0;
  int N = 0;
  Eigen::VectorXd x;  // N-1 interior points

  int points() const { return N - 1; }
  /// (N-1)^2
  int dimension() const { return points() * points(); }
};

DvrGrid make_grid(double R, int N);

/// Kinetic matrix of -d^2/dx^2 on the 1D grid, in closed form.
Eigen::MatrixXd kinetic_1d(double R, int N);

/// Same matrix built as S diag((k pi / 2R)^2) S^T with the orthogonal sine
/// transform S_ik = sqrt(2/N) sin(pi i k / N).
Eigen::MatrixXd kinetic_1d_transform(double R, int N);

/// Relative-motion Hamiltonian on the product grid; index = i * (N-1) + j
/// for the point (x_i, y_j). N must be odd so that rho = 0 is not a node.
Eigen::MatrixXd assemble(double R, int N, double omega_x);

/// Index permutation implementing x -> -x (or y -> -y) on the product grid.
std::vector<int> reflection(int N, bool along_x);

/// Lowest `count` eigenvalues with the sector of each eigenvector read off
/// from its reflection parities.
std::vector<Level> spectrum(double R, int N, double omega_x, int count);

/// N such that (N-1)^2 = d; throws unless d is a perfect square of an even
/// number.
int grid_intervals(int d);

/// Table 5 rows: (d, R) pairs with their six lowest levels.
struct Table5Row {
  int d = 0;
  double R = 0.0;
  std::vector<Level> levels;
};
std::vector<Table5Row> table5(double omega_x = 1.0 / 64, int count = 6);

}  // namespace qdot::dvr
