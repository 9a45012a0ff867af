#pragma once

// Rayleigh-Ritz in the product basis of the two 1D oscillators
// -d^2/dx^2 + wx^2 x^2 and -d^2/dy^2 + wy^2 y^2, one (x, y)-parity sector at
// a time. The 1/rho term uses
//
//   1/rho = (2/sqrt(pi)) int_0^inf exp(-t^2 rho^2) dt,
//
// which factorizes into 1D Gaussian matrix elements.

#include <vector>

#include <Eigen/Dense>

#include "qdot/model.hpp"

namespace qdot::rr {

/// <phi_m| exp(-t^2 x^2) |phi_m2> for the normalized eigenfunctions of
/// -d^2/dx^2 + omega^2 x^2.
double gaussian_me(int m, int m2, double omega, double t);

/// The same elements for 0 <= m, m2 < count at once.
Eigen::MatrixXd gaussian_block(int count, double omega, double t);

/// <m n| 1/rho |m2 n2>; zero unless m = m2 and n = n2 mod 2.
double coulomb_me(int m, int n, int m2, int n2, double omega_x, double omega_y);

struct RrBasis {
  double omega_x = 0.0;
  double omega_y = 0.0;
  SectorLabel sector;
  std::vector<int> m;  // x quanta, parity of sector.x
  std::vector<int> n;  // y quanta, parity of sector.y

  int per_axis() const { return static_cast<int>(m.size()); }
  int dimension() const { return per_axis() * per_axis(); }
};

/// Square cut: the k = sqrt(D) lowest quanta of the sector's parity on each
/// axis; basis index a * k + b for (m[a], n[b]). Throws unless D = k^2.
RrBasis make_basis(int D, double omega_x, double omega_y, const SectorLabel& sector);

/// Oscillator energies on the diagonal plus the Coulomb block (relative
/// quadrature tolerance 1e-12).
Eigen::MatrixXd assemble(const RrBasis& basis);

/// The lowest `count` eigenvalues, ascending.
std::vector<Level> spectrum(int D, double omega_x, double omega_y, const SectorLabel& sector, int count);

struct ScanPoint {
  double omega_y = 0.0;
  SectorLabel sector;
  int level_index = 0;  // 0-based within the sector
  double energy = 0.0;
};

/// Lowest `levels` eigenvalues of each of the four sectors along a wy grid.
std::vector<ScanPoint> scan_omega_y(double omega_x, const std::vector<double>& omega_y, int levels, int D = 144);

/// Table 4 layout: (+,+) ground, (-,+) ground, (+,+) second, (+,-) ground,
/// (-,-) ground, (-,+) second.
struct Table4Row {
  int D = 0;
  std::vector<Level> levels;
};
std::vector<Table4Row> table4(double omega_x = 1.0 / 64, const std::vector<int>& dims = {25, 64, 144, 256});

}  // namespace qdot::rr
