#pragma once

// Power-series solution of the separated equations with a wall at eta = R.
//
// Each factor solves  g'' = (beta - eps eta^2 + wx^2 eta^6) g  and is
// expanded as g = sum_{i<=K} b_i eta^(2i+nu) with b_0 = 1, so that
//
//   b_i = [beta b_{i-1} - eps b_{i-2} + wx^2 b_{i-4}] / [(2i+nu)(2i+nu-1)].
//
// A bound state is a common zero of F1 = g(R; 1+delta) and
// F2 = g(R; 1-delta) in (eps, delta).

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdot/exactalg.hpp"
#include "qdot/model.hpp"
#include "qdot/numkit/bigreal.hpp"
#include "qdot/numkit/exact_real.hpp"

namespace qdot::fm {

using numkit::BigReal;
using numkit::ExactReal;
using numkit::Precision;
using numkit::Rational;

struct FmError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Partial sums lost more than half the working bits to cancellation.
struct InsufficientPrecisionError : FmError {
  using FmError::FmError;
};

/// No zero where one was expected (bracket without sign change, Newton
/// divergence, collapsed delta).
struct NotFoundError : FmError {
  using FmError::FmError;
};

struct SeriesState {
  std::vector<BigReal> b;        // b_0..b_K
  std::vector<BigReal> db_deps;  // d b_i / d eps
  std::vector<BigReal> db_dbeta; // d b_i / d beta
  BigReal eps, beta, omega_x;
  int nu = 0;
  int K = 0;
  Precision bits = 0;
};

/// Coefficients and their eps/beta derivatives at the precision of `eps`.
SeriesState raw_series(const BigReal& eps, const BigReal& beta, const BigReal& omega_x, int nu, int K);

/// Value of one series at eta = R: sum b_i R^(2i+nu), with the partial
/// derivatives. `max_term` is the largest |b_i R^(2i+nu)|.
struct SeriesValue {
  BigReal value, d_eps, d_beta, max_term;
};

/// Throws InsufficientPrecisionError when the largest term exceeds
/// 2^(p/2) max(|value|, R^nu).
SeriesValue evaluate_at(const SeriesState& s, const BigReal& R);

struct BoundaryValues {
  BigReal F1, F2;
  BigReal J[2][2];  // d(F1,F2)/d(eps,delta)
  BigReal scale1, scale2;
};

BoundaryValues boundary_values(const BigReal& eps, const BigReal& delta, const BigReal& omega_x, int nu,
                               const BigReal& R, int K);

/// Bits used on a (K, R) rung for `digits` target digits.
Precision working_precision(int K, double R, int digits);

/// Which state to follow: node counts of the two factors (n1 <= n2) and
/// their parity index. n1 == n2 means delta = 0.
struct FmState {
  int n1 = 0;
  int n2 = 0;
  int nu = 0;

  bool delta_zero() const { return n1 == n2; }
  std::string str() const;
};

/// "ground-s", "ground-t", "pair-even", "pair-odd", "delta0-<k>" (k-th
/// delta = 0 level of parity nu) or an explicit node pair "n1,n2".
FmState parse_state(const std::string& text, int nu);

struct FmResult {
  BigReal energy;
  BigReal delta;  // |delta|
  int K = 0;
  double R = 0.0;
  Precision bits = 0;
  int converged_digits = 0;
  std::pair<int, int> node_counts;  // (factor of 1+|delta|, factor of 1-|delta|)
  int nu = 0;
  int iterations = 0;
};

/// Node count of g(eta; beta) on the whole line from sign changes of the
/// truncated series on (0, R).
int count_nodes(const BigReal& eps, const BigReal& beta, const BigReal& omega_x, int nu, const BigReal& R, int K,
                int samples = 600);

/// The root_index-th zero (1-based, ascending) of g(R; eps, 1) in the
/// bracket, from a sign scan followed by safeguarded Newton.
FmResult solve_delta0(const BigReal& omega_x, int nu, double R, int K, std::pair<BigReal, BigReal> bracket,
                      int root_index, int digits = 30, int scan_points = 64);

/// Damped Newton for the common zero of (F1, F2) from `seed` = (eps, delta).
/// Returns the signed delta it converged to.
FmResult solve_pair(const BigReal& omega_x, int nu, double R, int K, std::pair<BigReal, BigReal> seed,
                    int digits = 30);

struct Seed {
  double eps = 0.0;
  double delta = 0.0;
};

/// Cells of an (eps, delta) grid in which both F1 and F2 change sign.
std::vector<Seed> scan_seeds(const BigReal& omega_x, int nu, double R, int K, std::pair<double, double> eps_range,
                             std::pair<double, double> delta_range, int grid);

/// Estimate of the walled problem from a double-precision sine grid of the
/// separated operator -d^2 - eps eta^2 + wx^2 eta^6 on [-R, R]: returns the
/// eps and |delta| at which the factors with n1 and n2 nodes have
/// beta1 + beta2 = 2.
Seed separated_seed(double omega_x, const FmState& state, double R, int grid = 320);

struct FmRung {
  int K = 0;
  double R = 0.0;
  Precision bits = 0;
  BigReal energy;
  BigReal delta;
  int agreeing_digits = 0;  // with the previous rung; 0 on the first
};

struct LadderOptions {
  int K0 = 60;
  int dK = 20;
  std::optional<double> R0;   // default 5 (16 wx)^(-1/4)
  std::optional<double> dR;   // default R0 / 10
  int max_rungs = 60;
  bool verify_doubled = true;
};

struct Convergence {
  FmResult result;
  std::vector<FmRung> trace;
  bool doubled_precision_agrees = false;
};

/// Walks the (K, R) ladder until energy and delta agree to `digits`
/// significant digits across one K step and one R step, then re-solves the
/// last rung at twice the precision.
Convergence converge(const ExactReal& omega_x, const FmState& state, int digits, const LadderOptions& opt = {});

/// Solve of a single rung (seeded from the separated estimate).
FmResult solve_rung(const ExactReal& omega_x, const FmState& state, int K, double R, int digits,
                    std::optional<std::pair<BigReal, BigReal>> seed = std::nullopt,
                    std::optional<Precision> bits = std::nullopt);

/// Significant digits on which a and b agree (capped at 60).
int agreeing_digits(const BigReal& a, const BigReal& b);

/// Table 3 layout: ground (+,+), ground (-,+), nu = 0 pair, nu = 1 pair.
const std::vector<FmState>& table3_columns();

struct Table3Cell {
  std::optional<Level> level;
  std::optional<std::string> error;
  std::optional<Convergence> convergence;
};

struct Table3Row {
  ExactReal omega_x;
  std::vector<Table3Cell> cells;
};

/// The default Table 3 frequencies.
std::vector<ExactReal> table3_frequencies();

/// Converges every cell (in parallel when threads > 1). Cells whose wx and
/// node pair match a quasi-exact solution are flagged exact and converged
/// to 14 digits.
std::vector<Table3Row> table3(const std::vector<ExactReal>& omegas, int digits = 8, int threads = 0);

Level to_level(const FmResult& r, int digits);

/// The quasi-exact solution (n <= 3) with this wx, parity and node pair.
const exactalg::QuasiExactSolution* exact_match(const ExactReal& omega_x, const FmState& state);

}  // namespace qdot::fm
