#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qdot/dvrsolver.hpp"
#include "qdot/numkit/eigen.hpp"

using namespace qdot;
using namespace qdot::dvr;
using qdot::numkit::sym_eigen;

TEST_CASE("grid") {
  auto g = make_grid(2.0, 5);
  REQUIRE(g.points() == 4);
  CHECK(g.x[0] == doctest::Approx(-1.2));
  CHECK(g.x[3] == doctest::Approx(1.2));
  CHECK(g.dimension() == 16);
  CHECK_THROWS_AS(make_grid(2.0, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(-1.0, 5), std::invalid_argument);
  CHECK(grid_intervals(900) == 31);
  CHECK_THROWS_AS(grid_intervals(899), std::invalid_argument);
  CHECK_THROWS_AS(grid_intervals(25), std::invalid_argument);  // N = 6
}

TEST_CASE("kinetic matrix is diagonal in the box sine basis") {
  const double pi = std::numbers::pi;
  for (auto [R, N] : {std::pair{1.0, 3}, std::pair{30.0, 17}, std::pair{35.0, 31}, std::pair{40.0, 31}}) {
    CAPTURE(N);
    Eigen::MatrixXd t = kinetic_1d(R, N);
    CHECK((t - t.transpose()).norm() == 0.0);
    auto eig = sym_eigen(t, N - 1, false);
    for (int k = 1; k < N; ++k) {
      const double exact = std::pow(k * pi / (2 * R), 2);
      CHECK(std::abs(eig.values[k - 1] - exact) <= 1e-13 * exact);
    }
    Eigen::MatrixXd s = kinetic_1d_transform(R, N);
    CHECK((t - s).cwiseAbs().maxCoeff() <= 1e-13 * t.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("N = 3 closed form") {
  // Two points at -R/3 and R/3; eigenvalues (pi/2R)^2 and (pi/R)^2.
  const double c = std::pow(std::numbers::pi / 2.0, 2);
  Eigen::MatrixXd t = kinetic_1d(1.0, 3);
  CHECK(t(0, 0) == doctest::Approx(2.5 * c));
  CHECK(t(0, 1) == doctest::Approx(-1.5 * c));
}

TEST_CASE("reflections commute with the Hamiltonian") {
  for (int N : {5, 9, 15}) {
    Eigen::MatrixXd h = assemble(10.0, N, 0.1);
    CHECK((h - h.transpose()).norm() == 0.0);
    for (bool along_x : {true, false}) {
      auto p = reflection(N, along_x);
      Eigen::PermutationMatrix<Eigen::Dynamic> P(static_cast<Eigen::Index>(p.size()));
      for (std::size_t k = 0; k < p.size(); ++k) P.indices()[static_cast<Eigen::Index>(k)] = p[k];
      Eigen::MatrixXd ph = P * h * P.transpose();
      CHECK((ph - h).cwiseAbs().maxCoeff() <= 1e-14 * h.cwiseAbs().maxCoeff());
      // An involution.
      for (std::size_t k = 0; k < p.size(); ++k) CHECK(p[static_cast<std::size_t>(p[k])] == static_cast<int>(k));
    }
  }
}

TEST_CASE("eigenvalues decrease toward convergence with the wall distance at fixed spacing") {
  // Same spacing 2R/N, larger box: a variational enlargement of the grid space.
  auto small = spectrum(15.0, 15, 1.0 / 16, 4);
  auto large = spectrum(21.0, 21, 1.0 / 16, 4);
  for (int k = 0; k < 4; ++k) CHECK(large[k].energy <= small[k].energy + 1e-12);
}

TEST_CASE("Table 5") {
  struct Row {
    int d;
    double R;
    double e[6];
  };
  const Row rows[] = {
      {256, 30, {0.1719120, 0.1727763, 0.2206480, 0.2214837, 0.2260438, 0.2277602}},
      {400, 30, {0.1719294, 0.1727757, 0.2206258, 0.2215710, 0.2260337, 0.2277544}},
      {400, 35, {0.1718335, 0.1726833, 0.2204264, 0.2206146, 0.2259909, 0.2260835}},
      {576, 35, {0.1718460, 0.1726824, 0.2204845, 0.2205998, 0.2259843, 0.2260752}},
      {900, 35, {0.1718557, 0.1726815, 0.2205324, 0.2205924, 0.2259816, 0.2260703}},
      {900, 40, {0.1718483, 0.1726799, 0.2204538, 0.2205956, 0.2259819, 0.2259880}},
  };
  auto table = table5();
  REQUIRE(table.size() == 6);
  for (std::size_t r = 0; r < 6; ++r) {
    CAPTURE(rows[r].d);
    CAPTURE(rows[r].R);
    CHECK(table[r].d == rows[r].d);
    REQUIRE(table[r].levels.size() == 6);
    for (int k = 0; k < 6; ++k) CHECK(std::abs(table[r].levels[k].energy - rows[r].e[k]) <= 2e-6);
  }
  // Sector labels of the best row: ground singlet, then (-,+).
  CHECK(table[5].levels[0].sectors[0] == SectorLabel{Parity::even, Parity::even});
  CHECK(table[5].levels[1].sectors[0] == SectorLabel{Parity::odd, Parity::even});
}
