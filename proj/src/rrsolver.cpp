#include "qdot/rrsolver.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdot/numkit/eigen.hpp"
#include "qdot/numkit/quadrature.hpp"

namespace qdot::rr {

namespace {

// Gauss-Hermite nodes for products of two polynomials of degree < count are
// exact with count points.
const numkit::QuadratureRule& hermite_rule(int count) {
  thread_local std::vector<numkit::QuadratureRule> cache;
  if (static_cast<int>(cache.size()) <= count) cache.resize(static_cast<std::size_t>(count) + 1);
  auto& r = cache[static_cast<std::size_t>(count)];
  if (r.nodes.size() == 0) r = numkit::gauss_hermite(count);
  return r;
}

}  // namespace

Eigen::MatrixXd gaussian_block(int count, double omega, double t) {
  if (count < 1) throw std::invalid_argument("gaussian_block: count must be positive");
  if (!(omega > 0)) throw std::invalid_argument("gaussian_block: omega must be positive");
  // With u = sqrt(omega) x the element is int exp(-(1+s) u^2) h_m h_m2 du,
  // s = t^2/omega, h_m the orthonormal Hermite polynomials; scaling
  // v = sqrt(1+s) u leaves a plain Gauss-Hermite integral.
  const double c = std::sqrt(1.0 + t * t / omega);
  const auto& rule = hermite_rule(count);
  const Eigen::Index q = rule.nodes.size();
  Eigen::MatrixXd h(count, q);
  const double h0 = std::pow(std::numbers::pi, -0.25);
  for (Eigen::Index j = 0; j < q; ++j) {
    const double u = rule.nodes[j] / c;
    h(0, j) = h0;
    if (count > 1) h(1, j) = std::sqrt(2.0) * u * h0;
    for (int m = 1; m + 1 < count; ++m)
      h(m + 1, j) = std::sqrt(2.0 / (m + 1)) * u * h(m, j) - std::sqrt(double(m) / (m + 1)) * h(m - 1, j);
  }
  Eigen::MatrixXd g = h * rule.weights.asDiagonal() * h.transpose();
  g /= c;
  // Opposite-parity elements vanish identically.
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      if ((a + b) % 2 != 0) g(a, b) = 0.0;
  return g;
}

double gaussian_me(int m, int m2, double omega, double t) {
  if (m < 0 || m2 < 0) throw std::invalid_argument("gaussian_me: negative quantum number");
  if ((m + m2) % 2 != 0) return 0.0;
  return gaussian_block(std::max(m, m2) + 1, omega, t)(m, m2);
}

double coulomb_me(int m, int n, int m2, int n2, double omega_x, double omega_y) {
  if ((m + m2) % 2 != 0 || (n + n2) % 2 != 0) return 0.0;
  const int cx = std::max(m, m2) + 1, cy = std::max(n, n2) + 1;
  auto f = [&](double t) { return gaussian_block(cx, omega_x, t)(m, m2) * gaussian_block(cy, omega_y, t)(n, n2); };
  return 2.0 / std::sqrt(std::numbers::pi) * numkit::quad_semiinf(f).value;
}

RrBasis make_basis(int D, double omega_x, double omega_y, const SectorLabel& sector) {
  const int k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(std::max(D, 0)))));
  if (D < 1 || k * k != D) throw std::invalid_argument("RR dimension " + std::to_string(D) + " is not a square");
  if (!(omega_x > 0) || !(omega_y > 0)) throw std::invalid_argument("RR frequencies must be positive");
  RrBasis b{omega_x, omega_y, sector, {}, {}};
  const int px = sector.x == Parity::even ? 0 : 1;
  const int py = sector.y == Parity::even ? 0 : 1;
  for (int i = 0; i < k; ++i) {
    b.m.push_back(px + 2 * i);
    b.n.push_back(py + 2 * i);
  }
  return b;
}

Eigen::MatrixXd assemble(const RrBasis& basis) {
  const int k = basis.per_axis();
  const int D = basis.dimension();
  const int cx = basis.m.back() + 1, cy = basis.n.back() + 1;
  std::vector<Eigen::Index> ix(basis.m.begin(), basis.m.end()), iy(basis.n.begin(), basis.n.end());

  // Coulomb block: kron(Gx(t), Gy(t)) restricted to the sector.
  auto integrand = [&](double t) -> Eigen::MatrixXd {
    const Eigen::MatrixXd gx = gaussian_block(cx, basis.omega_x, t)(ix, ix);
    const Eigen::MatrixXd gy = gaussian_block(cy, basis.omega_y, t)(iy, iy);
    Eigen::MatrixXd out(D, D);
    for (int a = 0; a < k; ++a)
      for (int a2 = 0; a2 < k; ++a2) out.block(a * k, a2 * k, k, k) = gx(a, a2) * gy;
    return out;
  };
  numkit::SemiInfiniteOptions opt;
  opt.tolerance = 1e-12;
  Eigen::MatrixXd h = 2.0 / std::sqrt(std::numbers::pi) * numkit::quad_semiinf(integrand, opt).value;
  // Symmetric bit for bit.
  h = (0.5 * (h + h.transpose())).eval();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      h(a * k + b, a * k + b) += (2 * basis.m[a] + 1) * basis.omega_x + (2 * basis.n[b] + 1) * basis.omega_y;
  return h;
}

std::vector<Level> spectrum(int D, double omega_x, double omega_y, const SectorLabel& sector, int count) {
  const RrBasis basis = make_basis(D, omega_x, omega_y, sector);
  if (count < 1 || count > D) throw std::invalid_argument("RR spectrum: count out of range");
  auto eig = numkit::sym_eigen(assemble(basis), count);
  std::vector<Level> out;
  for (int i = 0; i < count; ++i) {
    Level l;
    l.energy = eig.values[i];
    l.sectors = {sector};
    l.method = Method::rr;
    l.params.D = D;
    l.accuracy_digits = 7;
    out.push_back(std::move(l));
  }
  return out;
}

namespace {

const SectorLabel kSectors[4] = {{Parity::even, Parity::even},
                                 {Parity::odd, Parity::even},
                                 {Parity::even, Parity::odd},
                                 {Parity::odd, Parity::odd}};

}  // namespace

std::vector<ScanPoint> scan_omega_y(double omega_x, const std::vector<double>& omega_y, int levels, int D) {
  std::vector<ScanPoint> out;
  for (double wy : omega_y) {
    std::vector<std::future<std::vector<Level>>> jobs;
    for (const auto& s : kSectors) jobs.push_back(std::async(std::launch::async, [=] {
                                      return spectrum(D, omega_x, wy, s, levels);
                                    }));
    for (int s = 0; s < 4; ++s) {
      auto lv = jobs[static_cast<std::size_t>(s)].get();
      for (int i = 0; i < levels; ++i) out.push_back({wy, kSectors[s], i, lv[static_cast<std::size_t>(i)].energy});
    }
  }
  return out;
}

std::vector<Table4Row> table4(double omega_x, const std::vector<int>& dims) {
  std::vector<Table4Row> rows;
  for (int D : dims) {
    std::vector<std::future<std::vector<Level>>> jobs;
    for (const auto& s : kSectors)
      jobs.push_back(std::async(std::launch::async, [=] { return spectrum(D, omega_x, 2 * omega_x, s, 2); }));
    std::vector<std::vector<Level>> by_sector;
    for (auto& j : jobs) by_sector.push_back(j.get());
    // ++, -+, +-, -- in kSectors order.
    rows.push_back({D,
                    {by_sector[0][0], by_sector[1][0], by_sector[0][1], by_sector[2][0], by_sector[3][0],
                     by_sector[1][1]}});
  }
  return rows;
}

}  // namespace qdot::rr
