#pragma once

// Quasi-exact solutions. Each separated factor is written as
//
//   g(eta) = exp(-wx eta^4 / 4) * sum_i a_i eta^(2i + nu),
//
// whose coefficients obey A_i a_{i+1} + B_i a_i + C_i a_{i-1} = 0 with
//   A_i = (2i+nu+1)(2i+nu+2),  B_i = -beta,  C_i = eps + (1-4i-2nu) wx.
// The series stops after a_n when eps = wx (3 + 4n + 2nu) and the
// determinant polynomial P_n(eps, beta) vanishes for both beta1 and
// beta2 = 2 - beta1.

#include <optional>
#include <utility>
#include <vector>

#include "qdot/model.hpp"
#include "qdot/numkit/bigreal.hpp"
#include "qdot/numkit/exact_real.hpp"
#include "qdot/numkit/poly.hpp"

namespace qdot::exactalg {

using numkit::BigReal;
using numkit::ExactReal;
using numkit::Rational;

inline long recursion_A(int i, int nu) { return long(2 * i + nu + 1) * long(2 * i + nu + 2); }

template <typename T>
T recursion_C(int i, int nu, const T& eps, const T& omega_x) {
  return eps + omega_x * static_cast<long>(1 - 4 * i - 2 * nu);
}

/// 3 + 4n + 2nu
inline long termination_factor(int n, int nu) { return 3 + 4L * n + 2L * nu; }

/// eps at which the series truncates after a_n.
template <typename T>
T termination_energy(int n, int nu, const T& omega_x) {
  if (n < 0) throw std::invalid_argument("termination_energy: n must be >= 0");
  return omega_x * termination_factor(n, nu);
}

/// a_0 .. a_{count-1} by forward recursion from a_0 = 1.
template <typename T>
std::vector<T> recursion_coefficients(int nu, const T& eps, const T& beta, const T& omega_x, int count) {
  std::vector<T> a;
  a.reserve(static_cast<std::size_t>(count));
  if (count <= 0) return a;
  a.push_back(T(1) + eps * 0L);  // a_0 = 1 at the working precision
  for (int i = 0; i + 1 < count; ++i) {
    T next = beta * a[static_cast<std::size_t>(i)];
    if (i >= 1) next -= recursion_C(i, nu, eps, omega_x) * a[static_cast<std::size_t>(i - 1)];
    next /= recursion_A(i, nu);
    a.push_back(std::move(next));
  }
  return a;
}

/// P_n(eps, beta): determinant of the (n+1)x(n+1) tridiagonal matrix with
/// diagonal -beta, superdiagonal A_i and subdiagonal C_i, with wx
/// eliminated through the termination condition. The beta^(n+1)
/// coefficient is (-1)^(n+1). n = 0 gives -beta.
numkit::BiPoly build_polynomial(int n, int nu);

struct QuasiExactSolution {
  int n = 0;
  int nu = 0;
  ExactReal energy;
  ExactReal omega_x;
  ExactReal beta1;   // 1 + |delta|
  ExactReal beta2;   // 1 - |delta|
  ExactReal delta;   // |delta|
  std::vector<BigReal> a1, a2;                         // a_0..a_n per factor
  std::optional<std::vector<Rational>> exact_a1, exact_a2;  // when rational
  std::pair<int, int> node_counts;                     // (factor of beta1, factor of beta2)
  std::vector<SectorLabel> sectors;
  double residual = 0.0;  // max |P_n| at the refined point (0 when exact)

  bool is_rational() const { return energy.is_rational() && beta1.is_rational(); }
  bool degenerate() const { return delta.compare(0) != 0; }
};

/// Precision used for the stored series coefficients and residual checks.
inline constexpr numkit::Precision kSolutionBits = 640;

/// All quasi-exact solutions for truncation order n and parity nu, with
/// eps > 0, deduplicated under delta -> -delta. Ordered: delta = 0 first,
/// then by descending wx. n = 0 has none (it would need beta1 = beta2 = 0).
std::vector<QuasiExactSolution> solve_system(int n, int nu);

/// Series coefficients of both factors at `bits`, recomputed from the
/// recursion; a_{n+1} is the extra trailing entry when `with_next` is set.
std::pair<std::vector<BigReal>, std::vector<BigReal>> series_coefficients(const QuasiExactSolution& sol,
                                                                          numkit::Precision bits,
                                                                          bool with_next = false);

/// Exact a_0..a_{n+1} for rational solutions (a_{n+1} must be 0).
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> exact_series_coefficients(
    const QuasiExactSolution& sol);

/// Nodes of a factor on the whole line: 2 * (positive roots of
/// sum_i a_i s^i) + nu.
int count_nodes(const std::vector<Rational>& a, int nu);
int count_nodes(const std::vector<BigReal>& a, int nu);

/// Solutions for nu in {0, 1} and n = 1..n_max, in catalog order.
std::vector<QuasiExactSolution> catalog(int n_max);

Level to_level(const QuasiExactSolution& sol);

/// Table 1 rows as levels.
std::vector<Level> table1(int n_max);

}  // namespace qdot::exactalg
