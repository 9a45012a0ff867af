#include "qdot/dvrsolver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdot/numkit/eigen.hpp"

namespace qdot::dvr {

namespace {

void check_intervals(int N) {
  if (N < 3) throw std::invalid_argument("DVR needs N >= 3");
  if (N % 2 == 0) throw std::invalid_argument("DVR needs odd N (even N puts a node at rho = 0)");
}

}  // namespace

DvrGrid make_grid(double R, int N) {
  if (!(R > 0)) throw std::invalid_argument("DVR box half-width must be positive");
  check_intervals(N);
  DvrGrid g{R, N, Eigen::VectorXd(N - 1)};
  for (int i = 1; i < N; ++i) g.x[i - 1] = -R + 2.0 * R * i / N;
  return g;
}

Eigen::MatrixXd kinetic_1d(double R, int N) {
  check_intervals(N);
  const double pi = std::numbers::pi;
  const double L = 2.0 * R;
  const double c = 0.5 * (pi / L) * (pi / L);
  auto inv_sin2 = [](double a) {
    double s = std::sin(a);
    return 1.0 / (s * s);
  };
  Eigen::MatrixXd t(N - 1, N - 1);
  for (int i = 1; i < N; ++i) {
    t(i - 1, i - 1) = c * ((2.0 * N * N + 1.0) / 3.0 - inv_sin2(pi * i / N));
    for (int j = 1; j < i; ++j) {
      double sign = ((i - j) % 2 == 0) ? 1.0 : -1.0;
      double v = c * sign * (inv_sin2(pi * (i - j) / (2.0 * N)) - inv_sin2(pi * (i + j) / (2.0 * N)));
      t(i - 1, j - 1) = t(j - 1, i - 1) = v;
    }
  }
  return t;
}

Eigen::MatrixXd kinetic_1d_transform(double R, int N) {
  check_intervals(N);
  const double pi = std::numbers::pi;
  Eigen::MatrixXd s(N - 1, N - 1);
  for (int i = 1; i < N; ++i)
    for (int k = 1; k < N; ++k) s(i - 1, k - 1) = std::sqrt(2.0 / N) * std::sin(pi * i * k / N);
  Eigen::VectorXd lambda(N - 1);
  for (int k = 1; k < N; ++k) lambda[k - 1] = std::pow(k * pi / (2.0 * R), 2);
  return s * lambda.asDiagonal() * s.transpose();
}

Eigen::MatrixXd assemble(double R, int N, double omega_x) {
  const DvrGrid g = make_grid(R, N);
  const Eigen::MatrixXd t = kinetic_1d(R, N);
  const int n = g.points();
  const int d = g.dimension();
  const double wx2 = omega_x * omega_x;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int row = i * n + j;
      const double x = g.x[i], y = g.x[j];
      h(row, row) = wx2 * x * x + 4.0 * wx2 * y * y + 1.0 / std::hypot(x, y);
      // T (x) I couples i with i' at fixed j; I (x) T couples j with j'.
      for (int k = 0; k < n; ++k) {
        h(row, k * n + j) += t(i, k);
        h(row, i * n + k) += t(j, k);
      }
    }
  }
  return h;
}

std::vector<int> reflection(int N, bool along_x) {
  const int n = N - 1;
  std::vector<int> p(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // x_i -> -x_i maps index i to n-1-i.
      const int ri = along_x ? n - 1 - i : i;
      const int rj = along_x ? j : n - 1 - j;
      p[static_cast<std::size_t>(i * n + j)] = ri * n + rj;
    }
  }
  return p;
}

std::vector<Level> spectrum(double R, int N, double omega_x, int count) {
  const Eigen::MatrixXd h = assemble(R, N, omega_x);
  if (count < 1 || count > h.rows()) throw std::invalid_argument("DVR spectrum: count out of range");
  auto eig = numkit::sym_eigen(h, count, true);
  const auto px = reflection(N, true);
  const auto py = reflection(N, false);
  auto parity = [](const Eigen::VectorXd& v, const std::vector<int>& p) {
    double overlap = 0.0;
    for (Eigen::Index k = 0; k < v.size(); ++k) overlap += v[k] * v[p[static_cast<std::size_t>(k)]];
    return overlap >= 0 ? Parity::even : Parity::odd;
  };
  std::vector<Level> out;
  for (int k = 0; k < count; ++k) {
    Eigen::VectorXd v = eig.vectors.col(k);
    Level level;
    level.energy = eig.values[k];
    level.sectors = {SectorLabel{parity(v, px), parity(v, py)}};
    level.method = Method::dvr;
    level.params.R = R;
    level.params.N = N;
    level.params.D = (N - 1) * (N - 1);
    level.accuracy_digits = 7;
    out.push_back(std::move(level));
  }
  return out;
}

int grid_intervals(int d) {
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d))));
  if (n * n != d || n % 2 != 0 || n < 2) {
    throw std::invalid_argument("DVR dimension " + std::to_string(d) + " is not (N-1)^2 with N odd");
  }
  return n + 1;
}

std::vector<Table5Row> table5(double omega_x, int count) {
  static const std::pair<int, double> rows[] = {{256, 30}, {400, 30}, {400, 35}, {576, 35}, {900, 35}, {900, 40}};
  std::vector<Table5Row> out;
  for (auto [d, R] : rows) out.push_back({d, R, spectrum(R, grid_intervals(d), omega_x, count)});
  return out;
}

}  // namespace qdot::dvr
