#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qdot/numkit/bigreal.hpp"
#include "qdot/numkit/eigen.hpp"
#include "qdot/numkit/exact_real.hpp"
#include "qdot/numkit/poly.hpp"
#include "qdot/numkit/quadrature.hpp"
#include "qdot/numkit/roots.hpp"

namespace algebra {

using namespace qdot::numkit;


UniPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

BigReal tolerance(long decimal_exponent, Precision bits) {
  return BigReal::from_string("1e" + std::to_string(decimal_exponent), bits);
}

TEST_CASE("BigReal arithmetic keeps per-value precision") {
  BigReal a(1L, 256), b(3L, 512);
  BigReal c = a / b;
  CHECK(c.precision() == 512);
  CHECK(c.to_string(20) == "3.3333333333333333333e-01");
  CHECK((c * 3L - 1L).exponent() < -500);
  CHECK(BigReal(Rational(7, 8), 64).to_double() == 0.875);
  CHECK(BigReal(0.375, 64).to_rational() == Rational(3, 8));
  CHECK(abs(sqrt(BigReal(2L, 200)) - BigReal::from_string("1.41421356237309504880168872420969807856967187537694", 200)) <
        tolerance(-50, 200));
  CHECK(BigReal(2L, 64) > 1.5);
  CHECK(-BigReal(2L, 64) < 0);
}

TEST_CASE("parse_rational handles fractions and decimals exactly") {
  CHECK(parse_rational("1/64") == Rational(1, 64));
  CHECK(parse_rational(" -3/9 ") == Rational(-1, 3));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("5.5") == Rational(11, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(to_string(Rational(11, 16)) == "11/16");
}

TEST_CASE("polynomial algebra") {
  UniPoly p = poly({-2, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 7);
  CHECK(p.derivative() == poly({0, 2}));
  auto [quot, rem] = divmod(poly({-1, 0, 0, 1}), poly({-1, 1}));
  CHECK(quot == poly({1, 1, 1}));
  CHECK(rem.is_zero());
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
  CHECK(squarefree_part(poly({-1, 3, -3, 1})) == poly({-1, 1}));
  CHECK(p.compose_affine(2, -1) == poly({2, -4, 1}));
  CHECK_THROWS_AS(divmod(p, UniPoly()), DegenerateInputError);
}

TEST_CASE("resultant: Sylvester determinant examples") {
  // Res(b^2 - 2, b - 1) = p(1) = -1.
  CHECK(resultant(poly({-2, 0, 1}), poly({-1, 1})) == -1);
  CHECK(resultant(poly({0, 1}), poly({0, 1})) == 0);

  BiPoly p(std::vector<UniPoly>{UniPoly::constant(-2), UniPoly(), UniPoly::constant(1)});
  BiPoly q(std::vector<UniPoly>{UniPoly::constant(-1), UniPoly::constant(1)});
  UniPoly r = resultant(p, q, Variable::beta);
  CHECK(r == UniPoly::constant(-1));
  CHECK(resultant(BiPoly::beta(), BiPoly::beta(), Variable::beta).is_zero());
  CHECK_THROWS_AS(resultant(BiPoly(), q, Variable::beta), DegenerateInputError);

  // Res_beta(beta^2 - eps, beta - 1) = 1 - eps (root at eps = 1).
  BiPoly s(std::vector<UniPoly>{poly({0, -1}), UniPoly(), UniPoly::constant(1)});
  CHECK(resultant(s, q, Variable::beta) == poly({1, -1}));
  // Eliminating eps instead: Res_eps(beta^2 - eps, beta - 1) as a polynomial in beta.
  UniPoly r2 = resultant(s, q, Variable::eps);
  CHECK(r2(Rational(1)) == 0);
}

TEST_CASE("resultant vanishes at a planted common root") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-4, 4);
  auto random_bipoly = [&](int db, int de) {
    std::vector<UniPoly> c;
    for (int k = 0; k <= db; ++k) {
      std::vector<Rational> v;
      for (int i = 0; i <= de; ++i) v.emplace_back(coef(rng));
      c.emplace_back(std::move(v));
    }
    return BiPoly(std::move(c));
  };
  for (int trial = 0; trial < 12; ++trial) {
    Rational e0(coef(rng), 3), b0(coef(rng), 2);
    BiPoly beta_shift(std::vector<UniPoly>{UniPoly::constant(-b0), UniPoly::constant(1)});
    BiPoly eps_shift = BiPoly::from_eps(UniPoly{Rational(-e0), Rational(1)});
    BiPoly p = beta_shift * random_bipoly(2, 1) + eps_shift * random_bipoly(2, 2);
    BiPoly q = beta_shift * random_bipoly(1, 2) + eps_shift * random_bipoly(3, 1);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK(p(e0, b0) == 0);
    CHECK(q(e0, b0) == 0);
    UniPoly r = resultant(p, q, Variable::beta);
    CHECK(r(e0) == 0);
    CHECK(resultant(p, q, Variable::eps)(b0) == 0);
  }
}

TEST_CASE("isolate_real_roots") {
  auto two = isolate_real_roots(poly({-2, 0, 1}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].lo < Rational(-141421, 100000));
  CHECK(two[0].hi > Rational(-141422, 100000));
  CHECK(two[1].lo < Rational(141421, 100000));
  CHECK(two[1].hi > Rational(141421, 100000));
  CHECK(isolate_real_roots(poly({1, 0, 1})).empty());

  auto triple = isolate_real_roots(poly({-1, 3, -3, 1}));
  REQUIRE(triple.size() == 1);
  CHECK(rational_root(poly({-1, 3, -3, 1}), triple[0]) == Rational(1));
  CHECK_THROWS_AS(isolate_real_roots(UniPoly()), DegenerateInputError);

  // Count agrees with Sturm sign variations over the root bound.
  UniPoly w = poly({24, -50, 35, -10, 1});  // (x-1)(x-2)(x-3)(x-4)
  CHECK(isolate_real_roots(w).size() == 4);
  CHECK(count_real_roots(w, Rational(3, 2), Rational(7, 2)) == 2);
  for (const auto& iv : isolate_real_roots(w)) CHECK(rational_root(w, iv).has_value());
}

TEST_CASE("refine_root") {
  const Precision bits = 160;
  BigReal r = refine_root(poly({-2, 0, 1}), {1, 2}, tolerance(-30, bits));
  CHECK(abs(r - BigReal::from_string("1.4142135623730950488016887242", bits)) < tolerance(-29, bits));
  CHECK_THROWS_AS(refine_root(poly({-2, 0, 1}), {2, 3}, tolerance(-30, bits)), BracketViolationError);
  CHECK(refine_root(poly({-7, 8}), {Rational(7, 8), Rational(7, 8)}, tolerance(-30, bits)) == BigReal(0.875, bits));
}

TEST_CASE("refined roots bracket a sign change (property)") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  const Precision bits = 200;
  BigReal tol = tolerance(-40, bits);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i < 6; ++i) c.emplace_back(coef(rng));
    c.back() = 1;
    UniPoly p(std::move(c));
    UniPoly sq = squarefree_part(p);
    for (const auto& iv : isolate_real_roots(p)) {
      BigReal x = refine_root(p, iv, tol);
      if (auto q = rational_root(p, iv)) {
        CHECK(abs(x - BigReal(*q, bits)) < tol);
        continue;
      }
      CHECK(sq(x - tol).sign() * sq(x + tol).sign() < 0);
    }
  }
}

TEST_CASE("refinement at doubled precision keeps the reported digits") {
  UniPoly p = poly({-5, 0, 0, 1});  // cube root of 5
  auto iv = isolate_real_roots(p).at(0);
  BigReal lo = refine_root(p, iv, tolerance(-45, 256));
  BigReal hi = refine_root(p, iv, tolerance(-90, 512));
  CHECK(lo.to_string(40) == hi.to_string(40));
}

TEST_CASE("simplest_rational") {
  CHECK(simplest_rational(Rational(3, 10), Rational(2, 5)) == Rational(1, 3));
  CHECK(simplest_rational(Rational(-1, 2), Rational(1, 2)) == 0);
  CHECK(simplest_rational(Rational(7, 8), Rational(7, 8)) == Rational(7, 8));
  CHECK(simplest_rational(Rational(-2, 5), Rational(-3, 10)) == Rational(-1, 3));
}

TEST_CASE("ExactReal closed forms and comparisons") {
  UniPoly p = poly({-5, 0, 1});
  auto ivs = isolate_real_roots(p);
  ExactReal s5 = ExactReal::algebraic(p, ivs[1]);
  CHECK_FALSE(s5.is_rational());
  CHECK(s5.closed_form() == "sqrt(5)");
  CHECK(ExactReal::algebraic(p, ivs[0]).closed_form() == "-sqrt(5)");
  ExactReal shifted = s5.affine(Rational(2, 8), Rational(5, 8));
  CHECK(shifted.closed_form() == "(5+2*sqrt(5))/8");
  CHECK(shifted.compare(Rational(1)) > 0);
  CHECK(shifted.compare(Rational(2)) < 0);
  CHECK(std::abs(shifted.to_double() - (5 + 2 * std::sqrt(5.0)) / 8) < 1e-15);
  CHECK(ExactReal(Rational(11, 16)).str() == "11/16");

  // A quartic with a quadratic factor: (x^2 - 5)(x^2 - 2).
  UniPoly quartic = poly({10, 0, -7, 0, 1});
  auto roots = isolate_real_roots(quartic);
  REQUIRE(roots.size() == 4);
  CHECK(ExactReal::algebraic(quartic, roots[3]).closed_form() == "sqrt(5)");
  CHECK(ExactReal::algebraic(quartic, roots[2]).closed_form() == "sqrt(2)");
}

}  // namespace algebra

// Eigen expressions stay out of reach of the numkit operator overloads.
namespace dense {

using qdot::numkit::AccuracyError;
using qdot::numkit::gauss_hermite;
using qdot::numkit::gauss_legendre;
using qdot::numkit::is_symmetric;
using qdot::numkit::quad_semiinf;
using qdot::numkit::SemiInfiniteOptions;
using qdot::numkit::sym_eigen;

TEST_CASE("sym_eigen") {
  Eigen::Matrix2d m;
  m << 2, 1, 1, 2;
  auto r = sym_eigen(m, 2);
  CHECK(r.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.values[1] == doctest::Approx(3.0).epsilon(1e-14));

  Eigen::Vector3d d(5.0, -1.0, 2.0);
  auto rd = sym_eigen(Eigen::Matrix3d(d.asDiagonal()), 3);
  CHECK(rd.values[0] == -1.0);
  CHECK(rd.values[1] == 2.0);
  CHECK(rd.values[2] == 5.0);

  // Toeplitz tridiagonal: 2 - 2 cos(k pi / 6).
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(5, 5);
  for (int i = 0; i < 5; ++i) {
    t(i, i) = 2;
    if (i + 1 < 5) t(i, i + 1) = t(i + 1, i) = -1;
  }
  auto rt = sym_eigen(t, 5, true);
  for (int k = 1; k <= 5; ++k) {
    CHECK(rt.values[k - 1] == doctest::Approx(2 - 2 * std::cos(k * std::numbers::pi / 6)).epsilon(1e-14));
    Eigen::VectorXd v = rt.vectors.col(k - 1);
    CHECK((t * v - rt.values[k - 1] * v).norm() <= 1e-12 * t.norm());
  }
  CHECK_THROWS_AS(sym_eigen(t, 6), std::invalid_argument);
}

TEST_CASE("sym_eigen interlacing on random 8x8 matrices (property)") {
  std::mt19937 rng(99);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 25; ++trial) {
    Eigen::MatrixXd a(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = g(rng);
    REQUIRE(is_symmetric(a));
    auto full = sym_eigen(a, 8).values;
    int drop = trial % 8;
    Eigen::MatrixXd sub(7, 7);
    for (int i = 0, si = 0; i < 8; ++i) {
      if (i == drop) continue;
      for (int j = 0, sj = 0; j < 8; ++j) {
        if (j == drop) continue;
        sub(si, sj++) = a(i, j);
      }
      ++si;
    }
    auto part = sym_eigen(sub, 7).values;
    for (int k = 0; k < 7; ++k) {
      CHECK(full[k] <= part[k] + 1e-12);
      CHECK(part[k] <= full[k + 1] + 1e-12);
    }
  }
}

TEST_CASE("Gauss rules integrate polynomials exactly") {
  auto gl = gauss_legendre(7);
  CHECK(gl.weights.sum() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK((gl.weights.array() * gl.nodes.array().pow(12)).sum() == doctest::Approx(2.0 / 13).epsilon(1e-14));
  auto gh = gauss_hermite(20);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  CHECK(gh.weights.sum() == doctest::Approx(sqrt_pi).epsilon(1e-14));
  CHECK((gh.weights.array() * gh.nodes.array().pow(4)).sum() == doctest::Approx(0.75 * sqrt_pi).epsilon(1e-14));
  CHECK((gh.weights.array() * gh.nodes.array().pow(38)).sum() ==
        doctest::Approx(std::tgamma(19.5)).epsilon(1e-12));
}

TEST_CASE("quad_semiinf") {
  const double pi = std::numbers::pi;
  auto gauss = quad_semiinf([](double t) { return std::exp(-t * t); });
  CHECK(gauss.value == doctest::Approx(std::sqrt(pi) / 2).epsilon(1e-13));
  auto lorentz = quad_semiinf([](double t) { return 1.0 / (1.0 + t * t); });
  CHECK(lorentz.value == doctest::Approx(pi / 2).epsilon(1e-13));
  auto three_halves = quad_semiinf([](double t) { return std::pow(1.0 + t * t, -1.5); });
  CHECK(three_halves.value == doctest::Approx(1.0).epsilon(1e-13));

  auto vec = quad_semiinf([](double t) {
    Eigen::Vector2d v(std::exp(-t * t), 1.0 / (1.0 + t * t));
    return v;
  });
  CHECK(vec.value[0] == doctest::Approx(std::sqrt(pi) / 2).epsilon(1e-12));
  CHECK(vec.value[1] == doctest::Approx(pi / 2).epsilon(1e-12));

  SemiInfiniteOptions tight;
  tight.tolerance = 1e-15;
  tight.max_panels = 9;
  try {
    quad_semiinf([](double t) { return std::cos(40 * t) / (1.0 + t * t); }, tight);
    FAIL("expected AccuracyError");
  } catch (const AccuracyError& e) {
    CHECK(std::isfinite(e.best_estimate()));
  }
}

}  // namespace dense
