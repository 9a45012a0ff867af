#include "qdot/wavefield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdot/numkit/quadrature.hpp"

namespace qdot::wave {

ParabolicPoint to_parabolic(double x, double y) {
  const double rho = std::hypot(x, y);
  // rho - |y| loses digits when |x| << |y|; rebuild the small one from x.
  double p = std::sqrt(std::max(0.0, rho + std::abs(y)));
  double q = p > 0 ? std::abs(x) / p : 0.0;
  double eta1 = y >= 0 ? p : q;
  double eta2 = y >= 0 ? q : p;
  if (x < 0) eta1 = -eta1;
  return {eta1, eta2};
}

std::pair<double, double> to_cartesian(const ParabolicPoint& p) {
  return {p.eta1 * p.eta2, 0.5 * (p.eta1 * p.eta1 - p.eta2 * p.eta2)};
}

double eval_factor(const std::vector<double>& a, double omega_x, int nu, double eta) {
  const double s = eta * eta;
  double sum = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) sum = sum * s + *it;
  if (nu == 1) sum *= eta;
  return sum * std::exp(-0.25 * omega_x * s * s);
}

namespace {

std::vector<double> to_doubles(const std::vector<numkit::BigReal>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

}  // namespace

WaveFunction make_wavefunction(const exactalg::QuasiExactSolution& sol, Combination mode) {
  const bool paired = sol.degenerate();
  if (paired && mode == Combination::product)
    throw std::invalid_argument("delta != 0 needs the plus or minus combination");
  if (!paired && mode != Combination::product)
    throw std::invalid_argument("delta = 0 admits only the product state");
  auto [n1, n2] = sol.node_counts;
  if ((n1 - n2) % 2 != 0) throw InvalidPairingError("factor node counts differ in parity");

  WaveFunction wf;
  wf.a1 = to_doubles(sol.a1);
  wf.a2 = to_doubles(sol.a2);
  wf.omega_x = sol.omega_x.to_double();
  wf.nu = sol.nu;
  wf.beta1 = sol.beta1.to_double();
  wf.beta2 = sol.beta2.to_double();
  wf.energy = sol.energy.to_double();
  wf.mode = mode;
  wf.sector = classify_sector(n1, n2, wf.beta1 - 1.0, mode != Combination::minus);
  wf.norm = normalize(wf);
  return wf;
}

double eval_raw(const WaveFunction& wf, const ParabolicPoint& p) {
  const double w = wf.omega_x;
  const double direct = eval_factor(wf.a1, w, wf.nu, p.eta1) * eval_factor(wf.a2, w, wf.nu, p.eta2);
  if (wf.mode == Combination::product) return direct;
  const double swapped = eval_factor(wf.a1, w, wf.nu, p.eta2) * eval_factor(wf.a2, w, wf.nu, p.eta1);
  return wf.mode == Combination::plus ? direct + swapped : direct - swapped;
}

double eval_psi(const WaveFunction& wf, double x, double y) { return wf.norm * eval_raw(wf, to_parabolic(x, y)); }

namespace {

constexpr double kTailRatio = 1e-20;

// Tensor rule over [-L, L] x [0, L] applied to f(eta1, eta2) (eta1^2+eta2^2).
// L starts at (100/wx)^(1/4) and grows until the integrand on the outer
// edges is below kTailRatio of its peak.
template <typename F>
double parabolic_integral(double omega_x, F&& f, const NormalizeOptions& opt) {
  const double L0 = std::pow(100.0 / omega_x, 0.25);
  for (double L = L0; L <= 2.0 * L0; L *= 1.1) {
    const auto r1 = numkit::composite_legendre(-L, L, 2 * opt.panels, opt.order);
    const auto r2 = numkit::composite_legendre(0.0, L, opt.panels, opt.order);
    double sum = 0.0, peak = 0.0;
    for (Eigen::Index i = 0; i < r1.nodes.size(); ++i) {
      const double e1 = r1.nodes[i];
      double row = 0.0;
      for (Eigen::Index j = 0; j < r2.nodes.size(); ++j) {
        const double e2 = r2.nodes[j];
        const double v = f(e1, e2) * (e1 * e1 + e2 * e2);
        peak = std::max(peak, std::abs(v));
        row += r2.weights[j] * v;
      }
      sum += r1.weights[i] * row;
    }
    double edge = 0.0;
    for (Eigen::Index k = 0; k < r1.nodes.size(); ++k) {
      const double t = r1.nodes[k];
      const double u = 0.5 * (t + L);  // covers [0, L]
      edge = std::max({edge, std::abs(f(t, L) * (t * t + L * L)), std::abs(f(L, u) * (L * L + u * u)),
                       std::abs(f(-L, u) * (L * L + u * u))});
    }
    if (edge <= kTailRatio * peak) return sum;
  }
  throw numkit::AccuracyError("integrand tail does not decay below 1e-20 of its peak", 0.0, 0.0);
}

}  // namespace

double normalize(const WaveFunction& wf, const NormalizeOptions& opt) {
  if (!(wf.omega_x > 0)) throw std::invalid_argument("normalize: wx must be positive");
  const double I = parabolic_integral(
      wf.omega_x,
      [&](double e1, double e2) {
        const double v = eval_raw(wf, {e1, e2});
        return v * v;
      },
      opt);
  if (!(I > 0)) throw std::domain_error("normalize: vanishing wavefunction");
  return 1.0 / std::sqrt(I);
}

double overlap(const WaveFunction& a, const WaveFunction& b, const NormalizeOptions& opt) {
  const double w = std::min(a.omega_x, b.omega_x);
  return a.norm * b.norm *
         parabolic_integral(w, [&](double e1, double e2) { return eval_raw(a, {e1, e2}) * eval_raw(b, {e1, e2}); },
                            opt);
}

Grid sample_grid(const WaveFunction& wf, const Box& box, int n) {
  if (n < 2) throw std::invalid_argument("sample_grid needs n >= 2");
  Grid g;
  const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  g.x.reserve(total);
  g.y.reserve(total);
  g.psi.reserve(total);
  for (int r = 0; r < n; ++r) {
    const double y = box.y_min + (box.y_max - box.y_min) * r / (n - 1);
    for (int c = 0; c < n; ++c) {
      const double x = box.x_min + (box.x_max - box.x_min) * c / (n - 1);
      g.x.push_back(x);
      g.y.push_back(y);
      g.psi.push_back(eval_psi(wf, x, y));
    }
  }
  return g;
}

double apply_hamiltonian(const WaveFunction& wf, double x, double y, double h) {
  static constexpr double c[5] = {-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0};
  const double psi = eval_psi(wf, x, y);
  double lap = 2.0 * c[0] * psi;
  for (int k = 1; k <= 4; ++k) {
    lap += c[k] * (eval_psi(wf, x + k * h, y) + eval_psi(wf, x - k * h, y));
    lap += c[k] * (eval_psi(wf, x, y + k * h) + eval_psi(wf, x, y - k * h));
  }
  lap /= h * h;
  const double w2 = wf.omega_x * wf.omega_x;
  return -lap + (w2 * x * x + 4.0 * w2 * y * y + 1.0 / std::hypot(x, y)) * psi;
}

}  // namespace qdot::wave
