#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qdot/numkit/eigen.hpp"
#include "qdot/numkit/quadrature.hpp"
#include "qdot/rrsolver.hpp"

using namespace qdot;
using namespace qdot::rr;
using qdot::numkit::composite_legendre;
using qdot::numkit::sym_eigen;

namespace {

const SectorLabel kPP{Parity::even, Parity::even};
const SectorLabel kMP{Parity::odd, Parity::even};
const SectorLabel kPM{Parity::even, Parity::odd};
const SectorLabel kMM{Parity::odd, Parity::odd};

// Normalized oscillator function of -d^2 + w^2 x^2 by explicit Hermite
// recurrence (physicists' convention).
double phi(int m, double w, double x) {
  const double u = std::sqrt(w) * x;
  double h0 = 1.0, h1 = 2.0 * u;
  double hm = m == 0 ? h0 : h1;
  for (int k = 1; k < m; ++k) {
    double h2 = 2.0 * u * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
    hm = h2;
  }
  const double norm = std::pow(w / std::numbers::pi, 0.25) / std::sqrt(std::pow(2.0, m) * std::tgamma(m + 1.0));
  return norm * hm * std::exp(-0.5 * u * u);
}

}  // namespace

TEST_CASE("gaussian_me") {
  for (double w : {0.1, 1.0, 3.0})
    for (double t : {0.0, 0.3, 2.0}) CHECK(gaussian_me(0, 0, w, t) == doctest::Approx(std::sqrt(w / (w + t * t))));
  for (int m = 0; m < 40; ++m)
    for (int m2 = 0; m2 < 40; ++m2) CHECK(std::abs(gaussian_me(m, m2, 0.7, 0.0) - (m == m2 ? 1.0 : 0.0)) < 1e-12);
  CHECK(gaussian_me(0, 1, 1.0, 0.5) == 0.0);

  auto rule = composite_legendre(-14, 14, 40, 20);
  for (auto [m, m2, w, t] : {std::tuple{0, 2, 1.0, 1.0}, std::tuple{3, 5, 0.4, 0.7}, std::tuple{6, 6, 2.0, 1.3}}) {
    double brute = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
      const double x = rule.nodes[i];
      brute += rule.weights[i] * phi(m, w, x) * phi(m2, w, x) * std::exp(-t * t * x * x);
    }
    CHECK(std::abs(gaussian_me(m, m2, w, t) - brute) < 1e-12);
  }
}

TEST_CASE("coulomb_me") {
  CHECK(coulomb_me(0, 0, 0, 0, 1, 1) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
  CHECK(coulomb_me(0, 0, 1, 0, 1, 1) == 0.0);
  CHECK(coulomb_me(0, 1, 0, 0, 1, 1) == 0.0);

  // Polar brute force: r dr cancels 1/rho.
  auto rr_rule = composite_legendre(0, 10, 40, 20);
  auto th_rule = composite_legendre(0, 2 * std::numbers::pi, 40, 20);
  double brute = 0.0;
  for (Eigen::Index i = 0; i < rr_rule.nodes.size(); ++i)
    for (Eigen::Index j = 0; j < th_rule.nodes.size(); ++j) {
      const double r = rr_rule.nodes[i], th = th_rule.nodes[j];
      const double v = phi(0, 1.0, r * std::cos(th)) * phi(0, 2.0, r * std::sin(th));
      brute += rr_rule.weights[i] * th_rule.weights[j] * v * v;
    }
  CHECK(std::abs(coulomb_me(0, 0, 0, 0, 1.0, 2.0) - brute) < 1e-9);
  CHECK(coulomb_me(2, 1, 0, 3, 1.0, 2.0) == doctest::Approx(coulomb_me(0, 3, 2, 1, 1.0, 2.0)));
}

TEST_CASE("basis and assembly") {
  auto b = make_basis(9, 0.1, 0.2, kMP);
  CHECK(b.m == std::vector<int>{1, 3, 5});
  CHECK(b.n == std::vector<int>{0, 2, 4});
  CHECK_THROWS_AS(make_basis(10, 0.1, 0.2, kPP), std::invalid_argument);

  Eigen::MatrixXd one = assemble(make_basis(1, 1.0, 1.0, kPP));
  CHECK(one(0, 0) == doctest::Approx(2.0 + std::sqrt(std::numbers::pi)).epsilon(1e-12));

  auto basis = make_basis(36, 1.0 / 16, 1.0 / 8, kPM);
  Eigen::MatrixXd h = assemble(basis);
  CHECK(numkit::is_symmetric(h));
  for (int a = 0; a < 6; ++a)
    for (int c = 0; c < 6; ++c)
      CHECK(h(a * 6 + c, a * 6 + c) > (2 * basis.m[a] + 1) / 16.0 + (2 * basis.n[c] + 1) / 8.0);
  // The agreement of the block with the scalar elements.
  CHECK(h(7, 20) == doctest::Approx(coulomb_me(basis.m[1], basis.n[1], basis.m[3], basis.n[2], 1.0 / 16, 1.0 / 8))
                        .epsilon(1e-10));
}

TEST_CASE("Coulomb block is positive semidefinite on random principal submatrices") {
  auto basis = make_basis(64, 1.0 / 32, 1.0 / 16, kPP);
  Eigen::MatrixXd c = assemble(basis);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) c(a * 8 + b, a * 8 + b) -= (2 * basis.m[a] + 1) / 32.0 + (2 * basis.n[b] + 1) / 16.0;
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> pick(0, 63);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> idx;
    while (idx.size() < 4) {
      int k = pick(rng);
      if (std::find(idx.begin(), idx.end(), k) == idx.end()) idx.push_back(k);
    }
    Eigen::MatrixXd sub = c(idx, idx);
    CHECK(sym_eigen(sub, 1).values[0] > -1e-12);
  }
}

TEST_CASE("nested bases: monotone and interlacing") {
  for (const auto& s : {kPP, kMP, kPM, kMM}) {
    std::vector<double> prev;
    for (int D : {25, 64, 144}) {
      auto lv = spectrum(D, 0.05, 0.1, s, 4);
      for (int k = 0; k < 4; ++k) {
        CHECK(lv[static_cast<std::size_t>(k)].energy > 0);
        if (!prev.empty()) CHECK(lv[static_cast<std::size_t>(k)].energy <= prev[static_cast<std::size_t>(k)] + 1e-12);
      }
      prev.clear();
      for (auto& l : lv) prev.push_back(l.energy);
    }
    // Cauchy interlacing against a principal submatrix one smaller.
    Eigen::MatrixXd h = assemble(make_basis(49, 0.05, 0.1, s));
    auto full = sym_eigen(h, 49).values;
    auto part = sym_eigen(Eigen::MatrixXd(h.topLeftCorner(48, 48)), 48).values;
    for (int k = 0; k < 48; ++k) {
      CHECK(full[k] <= part[k] + 1e-12);
      CHECK(part[k] <= full[k + 1] + 1e-12);
    }
  }
}

TEST_CASE("Table 4") {
  const double expected[4][6] = {{0.1718911, 0.1726898, 0.2206744, 0.2206004, 0.2259834, 0.2260368},
                                 {0.1718856, 0.1726830, 0.2206472, 0.2205919, 0.2259803, 0.2259999},
                                 {0.1718823, 0.1726804, 0.2206274, 0.2205891, 0.2259796, 0.2259878},
                                 {0.1718805, 0.1726795, 0.2206169, 0.2205881, 0.2259795, 0.2259839}};
  auto rows = table4();
  REQUIRE(rows.size() == 4);
  for (int r = 0; r < 4; ++r) {
    CAPTURE(rows[r].D);
    for (int k = 0; k < 6; ++k) {
      CHECK(std::abs(rows[r].levels[k].energy - expected[r][k]) <= 2e-6);
      if (r > 0) CHECK(rows[r].levels[k].energy <= rows[r - 1].levels[k].energy + 1e-12);
    }
  }
  CHECK(rows[0].levels[1].sectors[0] == kMP);
  CHECK(rows[0].levels[3].sectors[0] == kPM);
}

TEST_CASE("scan degeneracies") {
  auto circ = scan_omega_y(0.5, {0.5}, 3, 100);
  auto find = [](const std::vector<ScanPoint>& pts, const SectorLabel& s, int i) {
    for (auto& p : pts)
      if (p.sector == s && p.level_index == i) return p.energy;
    FAIL("missing point");
    return 0.0;
  };
  // Rotation by 90 degrees swaps (-,+) and (+,-) exactly.
  for (int i = 0; i < 3; ++i) CHECK(std::abs(find(circ, kMP, i) - find(circ, kPM, i)) < 1e-11);
  // m = +-2 partners: (+,+) first excited with (-,-) ground.
  CHECK(std::abs(find(circ, kPP, 1) - find(circ, kMM, 0)) < 1e-5);

  // wy = 2 wx: the lowest (+,-) level pairs with a (+,+) level; both are
  // upper bounds of the converged pair energy at wx = 1/2.
  auto aniso = scan_omega_y(0.5, {1.0}, 2, 144);
  const double pm = find(aniso, kPM, 0), pp = find(aniso, kPP, 1);
  CHECK(std::abs(pm - pp) < 1e-2);
  CHECK(pm > 4.26681974);
  CHECK(pp > 4.26681974);
  CHECK(find(aniso, kPP, 0) > 2.681851499);
  CHECK(find(aniso, kPP, 0) - 2.681851499 < 1e-2);
}
