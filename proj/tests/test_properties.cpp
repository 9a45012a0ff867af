// Structural identities checked on generated parameters. No reference
// energies: every check compares the code against itself or an identity.

#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "qdot/dvrsolver.hpp"
#include "qdot/exactalg.hpp"
#include "qdot/frobenius.hpp"
#include "qdot/numkit/eigen.hpp"
#include "qdot/numkit/roots.hpp"
#include "qdot/rrsolver.hpp"

namespace props {

using namespace qdot;
using numkit::BigReal;
using numkit::BiPoly;
using numkit::ExactReal;
using numkit::Precision;
using numkit::Rational;
using numkit::UniPoly;

std::mt19937_64& rng() {
  static std::mt19937_64 g(20240607);
  return g;
}

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

Eigen::PermutationMatrix<Eigen::Dynamic> to_permutation(const std::vector<int>& p) {
  Eigen::PermutationMatrix<Eigen::Dynamic> P(static_cast<Eigen::Index>(p.size()));
  for (std::size_t k = 0; k < p.size(); ++k) P.indices()[static_cast<Eigen::Index>(k)] = p[k];
  return P;
}

TEST_CASE("determinant parity identity for n <= 6") {
  for (int nu : {0, 1}) {
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(n);
      const BiPoly p = exactalg::build_polynomial(n, nu);
      CHECK(p.compose_beta_affine(0, -1) == ((n + 1) % 2 == 0 ? p : -p));
      // Pointwise on random rationals as well.
      for (int k = 0; k < 5; ++k) {
        const Rational e(static_cast<long>(rng()() % 97) + 1, 13);
        const Rational b(static_cast<long>(rng()() % 201) - 100, 17);
        const Rational lhs = p(e, -b);
        const Rational rhs = p(e, b);
        CHECK(lhs == ((n + 1) % 2 == 0 ? rhs : -rhs));
      }
    }
  }
}

TEST_CASE("termination: a_{n+1} vanishes on the determinant zero set") {
  const Precision bits = 400;
  for (int nu : {0, 1}) {
    for (int n = 1; n <= 5; ++n) {
      const Rational eps(static_cast<long>(rng()() % 40) + 1, 16);
      const UniPoly in_beta = exactalg::build_polynomial(n, nu).at_eps(eps);
      for (const auto& iv : numkit::isolate_real_roots(in_beta)) {
        const BigReal beta = numkit::refine_root(in_beta, iv, BigReal::from_string("1e-110", bits));
        const BigReal e(eps, bits);
        const BigReal w = e / exactalg::termination_factor(n, nu);
        const auto a = exactalg::recursion_coefficients(nu, e, beta, w, n + 2);
        BigReal scale(0.0, bits);
        for (const auto& c : a) scale = max(scale, abs(c));
        CHECK(abs(a.back()) < scale * BigReal::from_string("1e-90", bits));
      }
    }
  }
}

TEST_CASE("termination: every catalogued solution truncates") {
  for (const auto& sol : exactalg::catalog(3)) {
    CAPTURE(sol.n);
    auto [a1, a2] = exactalg::series_coefficients(sol, 640, true);
    REQUIRE(a1.size() == static_cast<std::size_t>(sol.n + 2));
    CHECK(abs(a1.back()) < BigReal::from_string("1e-150", 640));
    CHECK(abs(a2.back()) < BigReal::from_string("1e-150", 640));
    if (auto exact = exactalg::exact_series_coefficients(sol)) {
      CHECK(exact->first.back() == Rational(0));
      CHECK(exact->second.back() == Rational(0));
    }
  }
}

TEST_CASE("delta sign symmetry of the boundary system") {
  const Precision bits = 256;
  for (int k = 0; k < 6; ++k) {
    const int nu = k % 2;
    const BigReal w(uniform(0.02, 0.3), bits);
    const BigReal eps(uniform(0.2, 2.0), bits);
    const BigReal delta(uniform(0.05, 1.5), bits);
    const BigReal R(uniform(3.0, 5.0), bits);
    const auto p = fm::boundary_values(eps, delta, w, nu, R, 80);
    const auto m = fm::boundary_values(eps, -delta, w, nu, R, 80);
    CHECK(p.F1 == m.F2);
    CHECK(p.F2 == m.F1);
    // The Jacobian columns follow: d/d(delta) flips sign under the swap.
    CHECK(p.J[0][0] == m.J[1][0]);
    CHECK(p.J[0][1] == -m.J[1][1]);
  }
}

TEST_CASE("delta sign symmetry of the solved pair") {
  const ExactReal w(Rational(1, 12));
  const fm::FmState state = fm::parse_state("pair-even", 0);
  const double R = 5.0;
  const fm::Seed s = fm::separated_seed(w.to_double(), state, R);
  const Precision bits = fm::working_precision(120, R, 20);
  const auto plus = fm::solve_pair(BigReal(w.rational(), bits), 0, R, 120,
                                   {BigReal(s.eps, bits), BigReal(s.delta, bits)}, 20);
  const auto minus = fm::solve_pair(BigReal(w.rational(), bits), 0, R, 120,
                                    {BigReal(s.eps, bits), BigReal(-s.delta, bits)}, 20);
  CHECK(fm::agreeing_digits(plus.energy, minus.energy) >= 20);
  CHECK(fm::agreeing_digits(plus.delta, -minus.delta) >= 20);
  CHECK(plus.node_counts == minus.node_counts);  // keyed to |delta|
}

TEST_CASE("doubling the precision keeps the reported digits") {
  struct Case {
    Rational w;
    const char* state;
    int nu;
  };
  for (const Case& c : {Case{Rational(1, 10), "ground-s", 0}, Case{Rational(3, 7), "ground-t", 1},
                        Case{Rational(1, 12), "pair-even", 0}}) {
    CAPTURE(c.state);
    const ExactReal w(c.w);
    const fm::FmState state = fm::parse_state(c.state, c.nu);
    const int digits = 20;
    const double R = 5.0 * std::pow(16.0 * w.to_double(), -0.25);
    const Precision bits = fm::working_precision(100, R, digits);
    const auto base = fm::solve_rung(w, state, 100, R, digits, std::nullopt, bits);
    const auto twice = fm::solve_rung(w, state, 100, R, digits, std::pair{base.energy, base.delta}, 2 * bits);
    CHECK(fm::agreeing_digits(base.energy, twice.energy) >= digits);
    if (!state.delta_zero()) CHECK(fm::agreeing_digits(base.delta, twice.delta) >= digits);
  }
  // The full ladder re-verifies its last rung the same way.
  const auto conv = fm::converge(ExactReal(Rational(1, 10)), fm::parse_state("ground-s", 0), 8);
  CHECK(conv.doubled_precision_agrees);
  CHECK(conv.result.converged_digits >= 8);
}

TEST_CASE("Rayleigh-Ritz eigenvalues interlace under deletion of a basis function") {
  const SectorLabel sectors[] = {{Parity::even, Parity::even},
                                 {Parity::odd, Parity::even},
                                 {Parity::even, Parity::odd},
                                 {Parity::odd, Parity::odd}};
  for (const auto& s : sectors) {
    const double wx = uniform(0.05, 0.6);
    const double wy = uniform(0.05, 1.2);
    CAPTURE(wx);
    CAPTURE(wy);
    const Eigen::MatrixXd h = rr::assemble(rr::make_basis(36, wx, wy, s));
    const Eigen::Index d = h.rows();
    const Eigen::VectorXd full = numkit::sym_eigen(h, d).values;
    const auto drop = static_cast<Eigen::Index>(rng()() % static_cast<unsigned long>(d));
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < d; ++i)
      if (i != drop) keep.push_back(i);
    const Eigen::MatrixXd sub = h(keep, keep);
    const Eigen::VectorXd part = numkit::sym_eigen(sub, d - 1).values;
    const double slack = 1e-12 * full.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k + 1 < d; ++k) {
      CHECK(full[k] <= part[k] + slack);
      CHECK(part[k] <= full[k + 1] + slack);
    }
  }
}

TEST_CASE("grid reflections commute with the DVR Hamiltonian") {
  for (int k = 0; k < 4; ++k) {
    const int N = 2 * static_cast<int>(rng()() % 6) + 5;
    const double R = uniform(4.0, 20.0);
    const double w = uniform(0.01, 0.5);
    CAPTURE(N);
    const Eigen::MatrixXd h = dvr::assemble(R, N, w);
    for (bool along_x : {true, false}) {
      const auto P = to_permutation(dvr::reflection(N, along_x));
      const Eigen::MatrixXd ph = P * h * P.transpose();
      CHECK((ph - h).cwiseAbs().maxCoeff() <= 1e-14 * h.cwiseAbs().maxCoeff());
    }
    // Both reflections together commute as well.
    const auto Px = to_permutation(dvr::reflection(N, true));
    const auto Py = to_permutation(dvr::reflection(N, false));
    CHECK(((Px * Py).toDenseMatrix() - (Py * Px).toDenseMatrix()).norm() == 0.0);
  }
}

}  // namespace props
