#include "qdot/exactalg.hpp"

#include <algorithm>

#include "qdot/numkit/roots.hpp"

namespace qdot::exactalg {

using numkit::BiPoly;
using numkit::UniPoly;

BiPoly build_polynomial(int n, int nu) {
  if (n < 0) throw std::invalid_argument("build_polynomial: n must be >= 0");
  if (nu != 0 && nu != 1) throw std::invalid_argument("build_polynomial: nu must be 0 or 1");
  const BiPoly minus_beta = -BiPoly::beta();
  const long f = termination_factor(n, nu);
  BiPoly before(std::vector<UniPoly>{UniPoly::constant(1)});  // D_{-1}
  BiPoly current = minus_beta;                                  // D_0
  for (int k = 1; k <= n; ++k) {
    // A_{k-1} C_k with C_k = 4 eps (n + 1 - k) / f.
    UniPoly coupling = UniPoly::monomial(Rational(recursion_A(k - 1, nu) * 4L * (n + 1 - k), f), 1);
    BiPoly next = minus_beta * current - before * coupling;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

namespace {

std::vector<Rational> to_rationals(const std::vector<BigReal>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_rational());
  return out;
}

}  // namespace

int count_nodes(const std::vector<Rational>& a, int nu) {
  UniPoly p(a);
  if (p.degree() < 1) return nu;
  int positive = 0;
  for (auto iv : numkit::isolate_real_roots(p)) {
    // The constant term a_0 = 1 keeps zero off the root set.
    while (iv.lo < 0 && iv.hi > 0) iv = numkit::narrow(numkit::squarefree_part(p), iv, iv.width() / 2);
    if (iv.lo >= 0) ++positive;
  }
  return 2 * positive + nu;
}

int count_nodes(const std::vector<BigReal>& a, int nu) { return count_nodes(to_rationals(a), nu); }

std::pair<std::vector<BigReal>, std::vector<BigReal>> series_coefficients(const QuasiExactSolution& sol,
                                                                          numkit::Precision bits,
                                                                          bool with_next) {
  BigReal eps = sol.energy.value(bits);
  BigReal omega = sol.omega_x.value(bits);
  int count = sol.n + (with_next ? 2 : 1);
  return {recursion_coefficients(sol.nu, eps, sol.beta1.value(bits), omega, count),
          recursion_coefficients(sol.nu, eps, sol.beta2.value(bits), omega, count)};
}

std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> exact_series_coefficients(
    const QuasiExactSolution& sol) {
  if (!sol.is_rational()) return std::nullopt;
  Rational eps = sol.energy.rational();
  Rational omega = sol.omega_x.rational();
  return std::pair{recursion_coefficients(sol.nu, eps, sol.beta1.rational(), omega, sol.n + 2),
                   recursion_coefficients(sol.nu, eps, sol.beta2.rational(), omega, sol.n + 2)};
}

std::vector<QuasiExactSolution> solve_system(int n, int nu) {
  if (nu != 0 && nu != 1) throw std::invalid_argument("solve_system: nu must be 0 or 1");
  std::vector<QuasiExactSolution> out;
  if (n < 1) return out;

  const BiPoly p = build_polynomial(n, nu);
  const BiPoly q = p.compose_beta_affine(2, -1);  // P_n(eps, 2 - beta)
  const UniPoly res_eps = numkit::resultant(p, q, numkit::Variable::beta);
  const UniPoly res_beta = numkit::resultant(p, q, numkit::Variable::eps);
  if (res_eps.is_zero() || res_beta.is_zero()) {
    throw numkit::DegenerateInputError("P_n(eps, beta) and P_n(eps, 2 - beta) share a factor");
  }

  std::vector<ExactReal> eps_roots, beta_roots;
  for (const auto& iv : numkit::isolate_real_roots(res_eps)) {
    ExactReal e = ExactReal::algebraic(res_eps, iv);
    if (e.compare(0) > 0) eps_roots.push_back(e);
  }
  for (const auto& iv : numkit::isolate_real_roots(res_beta)) {
    ExactReal b = ExactReal::algebraic(res_beta, iv);
    if (b.compare(1) >= 0) beta_roots.push_back(b);
  }

  const numkit::Precision bits = kSolutionBits;
  const BigReal accept = BigReal::from_string("1e-100", bits);
  const long f = termination_factor(n, nu);

  for (const auto& e : eps_roots) {
    for (const auto& b : beta_roots) {
      ExactReal b2 = b.affine(-1, 2);
      double residual = 0.0;
      if (e.is_rational() && b.is_rational()) {
        if (p(e.rational(), b.rational()) != 0 || p(e.rational(), b2.rational()) != 0) continue;
      } else {
        BigReal ev = e.value(bits);
        BigReal r1 = abs(p(ev, b.value(bits)));
        BigReal r2 = abs(p(ev, b2.value(bits)));
        if (!(r1 < accept && r2 < accept)) continue;
        residual = max(r1, r2).to_double();
      }
      QuasiExactSolution sol;
      sol.n = n;
      sol.nu = nu;
      sol.energy = e;
      sol.omega_x = e.affine(Rational(1, f), 0);
      sol.beta1 = b;
      sol.beta2 = b2;
      sol.delta = b.affine(1, -1);
      sol.residual = residual;
      std::tie(sol.a1, sol.a2) = series_coefficients(sol, bits);
      if (auto exact = exact_series_coefficients(sol)) {
        sol.exact_a1 = std::vector<Rational>(exact->first.begin(), exact->first.end() - 1);
        sol.exact_a2 = std::vector<Rational>(exact->second.begin(), exact->second.end() - 1);
        sol.node_counts = {count_nodes(*sol.exact_a1, nu), count_nodes(*sol.exact_a2, nu)};
      } else {
        sol.node_counts = {count_nodes(sol.a1, nu), count_nodes(sol.a2, nu)};
      }
      double delta = sol.delta.to_double();
      sol.sectors = level_sectors(sol.node_counts.first, sol.node_counts.second, sol.degenerate() ? delta : 0.0);
      out.push_back(std::move(sol));
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const QuasiExactSolution& x, const QuasiExactSolution& y) {
    if (x.degenerate() != y.degenerate()) return !x.degenerate();
    return x.omega_x.to_double() > y.omega_x.to_double();
  });
  return out;
}

std::vector<QuasiExactSolution> catalog(int n_max) {
  if (n_max < 1) throw std::invalid_argument("catalog: n_max must be >= 1");
  std::vector<QuasiExactSolution> out;
  for (int nu : {0, 1}) {
    for (int n = 1; n <= n_max; ++n) {
      auto sols = solve_system(n, nu);
      out.insert(out.end(), std::make_move_iterator(sols.begin()), std::make_move_iterator(sols.end()));
    }
  }
  return out;
}

Level to_level(const QuasiExactSolution& sol) {
  Level level;
  level.energy = sol.energy.to_double();
  level.delta = sol.degenerate() ? sol.delta.to_double() : 0.0;
  level.sectors = sol.sectors;
  level.node_counts = sol.node_counts;
  level.method = Method::exact;
  level.accuracy_digits = 17;
  level.exact_energy = sol.energy.str();
  return level;
}

std::vector<Level> table1(int n_max) {
  std::vector<Level> out;
  for (const auto& sol : catalog(n_max)) out.push_back(to_level(sol));
  return out;
}

}  // namespace qdot::exactalg
