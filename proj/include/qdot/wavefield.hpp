#pragma once

// Closed-form wavefunctions of the quasi-exact levels. In parabolic
// coordinates x = eta1 eta2, y = (eta1^2 - eta2^2)/2 each state is built
// from the separated factors
//
//   g(eta; beta) = exp(-wx eta^4 / 4) sum_i a_i eta^(2i+nu).

#include <vector>

#include "qdot/exactalg.hpp"
#include "qdot/model.hpp"

namespace qdot::wave {

struct ParabolicPoint {
  double eta1 = 0.0;  // any sign
  double eta2 = 0.0;  // >= 0
};

/// eta1 = sign(x) sqrt(rho + y), eta2 = sqrt(rho - y); eta1 >= 0 at x = 0.
ParabolicPoint to_parabolic(double x, double y);

/// Inverse map (x, y).
std::pair<double, double> to_cartesian(const ParabolicPoint& p);

/// exp(-wx eta^4/4) sum_i a_i eta^(2i+nu).
double eval_factor(const std::vector<double>& a, double omega_x, int nu, double eta);

enum class Combination { product, plus, minus };

struct WaveFunction {
  std::vector<double> a1, a2;  // factors of beta1 = 1+|delta| and beta2 = 1-|delta|
  double omega_x = 0.0;
  int nu = 0;
  double beta1 = 1.0, beta2 = 1.0;
  double energy = 0.0;
  Combination mode = Combination::product;
  SectorLabel sector;
  double norm = 1.0;  // multiplies the raw combination
};

/// Product (delta = 0) or +- combination of a quasi-exact solution,
/// normalized. Throws std::invalid_argument when the mode does not fit the
/// solution and InvalidPairingError when the factor parities differ.
WaveFunction make_wavefunction(const exactalg::QuasiExactSolution& sol, Combination mode);

/// The unnormalized combination at a parabolic point.
double eval_raw(const WaveFunction& wf, const ParabolicPoint& p);

double eval_psi(const WaveFunction& wf, double x, double y);

struct NormalizeOptions {
  int panels = 24;  // per axis
  int order = 20;   // Gauss-Legendre points per panel
};

/// N with \iint |N psi_raw|^2 dx dy = 1, by tensor Gauss-Legendre over
/// eta1 in [-L, L], eta2 in [0, L] with measure (eta1^2 + eta2^2) and
/// L = (100 / wx)^(1/4). Throws numkit::AccuracyError when the integrand at
/// the cutoff is not below 1e-20 of its peak.
double normalize(const WaveFunction& wf, const NormalizeOptions& opt = {});

/// \iint psi_a psi_b dx dy with both functions as normalized.
double overlap(const WaveFunction& a, const WaveFunction& b, const NormalizeOptions& opt = {});

struct Box {
  double x_min = -15, x_max = 15, y_min = -15, y_max = 15;
};

struct Grid {
  std::vector<double> x, y, psi;  // row-major, x fastest
};

/// n x n samples of the normalized psi on a uniform grid (rows over y).
Grid sample_grid(const WaveFunction& wf, const Box& box, int n);

/// (-d_xx - d_yy + wx^2 x^2 + 4 wx^2 y^2 + 1/rho) psi at (x, y) by an
/// eighth-order central difference with step h.
double apply_hamiltonian(const WaveFunction& wf, double x, double y, double h = 1e-2);

}  // namespace qdot::wave
