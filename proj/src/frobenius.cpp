#include "qdot/frobenius.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/math/tools/roots.hpp>

#include "qdot/dvrsolver.hpp"
#include "qdot/exactalg.hpp"
#include "qdot/numkit/eigen.hpp"

namespace qdot::fm {

namespace {

BigReal one(Precision bits) { return BigReal(1L, bits); }

/// Value-only series sum at R (no derivatives, no guard); for sign scans.
BigReal series_sign_value(const BigReal& eps, const BigReal& beta, const BigReal& w2, int nu, int K,
                          const BigReal& R) {
  const Precision bits = eps.precision();
  std::vector<BigReal> b;
  b.reserve(static_cast<std::size_t>(K) + 1);
  b.push_back(one(bits));
  for (int i = 1; i <= K; ++i) {
    BigReal acc = beta * b[static_cast<std::size_t>(i - 1)];
    if (i >= 2) acc -= eps * b[static_cast<std::size_t>(i - 2)];
    if (i >= 4) acc += w2 * b[static_cast<std::size_t>(i - 4)];
    acc /= long(2 * i + nu) * long(2 * i + nu - 1);
    b.push_back(std::move(acc));
  }
  // Horner in R^2; only the sign is used.
  const BigReal r2 = R * R;
  BigReal sum = b.back();
  for (int i = K - 1; i >= 0; --i) {
    sum *= r2;
    sum += b[static_cast<std::size_t>(i)];
  }
  return sum;
}

BigReal correctly_rounded_sum(std::vector<BigReal>& terms, Precision bits) {
  std::vector<mpfr_ptr> ptrs;
  ptrs.reserve(terms.size());
  for (auto& t : terms) ptrs.push_back(t.get());
  BigReal out = BigReal::zero(bits);
  mpfr_sum(out.get(), ptrs.data(), ptrs.size(), MPFR_RNDN);
  return out;
}

SeriesValue evaluate(const SeriesState& s, const BigReal& R, bool guard) {
  const Precision bits = s.bits;
  const BigReal r2 = R * R;
  BigReal power = s.nu == 1 ? R.with_precision(bits) : one(bits);
  const BigReal base = power;
  std::vector<BigReal> terms, de, db;
  terms.reserve(s.b.size());
  de.reserve(s.b.size());
  db.reserve(s.b.size());
  BigReal max_term = BigReal::zero(bits);
  for (std::size_t i = 0; i < s.b.size(); ++i) {
    terms.push_back(s.b[i] * power);
    de.push_back(s.db_deps[i] * power);
    db.push_back(s.db_dbeta[i] * power);
    BigReal mag = abs(terms.back());
    if (mag > max_term) max_term = std::move(mag);
    power *= r2;
  }
  SeriesValue v{correctly_rounded_sum(terms, bits), correctly_rounded_sum(de, bits),
                correctly_rounded_sum(db, bits), max_term};
  if (guard) {
    BigReal floor = max(abs(v.value), base);
    if (max_term > ldexp(floor, static_cast<long>(bits / 2))) {
      throw InsufficientPrecisionError("series sum at R lost more than half of " + std::to_string(bits) +
                                       " bits to cancellation");
    }
  }
  return v;
}

struct Vec2 {
  BigReal e, d;
};

std::string describe_signs(const std::vector<int>& signs) {
  std::string s;
  for (int v : signs) s += v > 0 ? '+' : (v < 0 ? '-' : '0');
  return s;
}

}  // namespace

SeriesState raw_series(const BigReal& eps, const BigReal& beta, const BigReal& omega_x, int nu, int K) {
  if (K < 4) throw std::invalid_argument("raw_series: K must be >= 4");
  if (nu != 0 && nu != 1) throw std::invalid_argument("raw_series: nu must be 0 or 1");
  const Precision bits = std::max(eps.precision(), beta.precision());
  SeriesState s;
  s.eps = eps.with_precision(bits);
  s.beta = beta.with_precision(bits);
  s.omega_x = omega_x.with_precision(bits);
  s.nu = nu;
  s.K = K;
  s.bits = bits;
  const BigReal w2 = s.omega_x * s.omega_x;
  const auto n = static_cast<std::size_t>(K) + 1;
  s.b.reserve(n);
  s.db_deps.reserve(n);
  s.db_dbeta.reserve(n);
  s.b.push_back(one(bits));
  s.db_deps.push_back(BigReal::zero(bits));
  s.db_dbeta.push_back(BigReal::zero(bits));
  for (int i = 1; i <= K; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const long denom = long(2 * i + nu) * long(2 * i + nu - 1);
    BigReal b = s.beta * s.b[k - 1];
    BigReal de = s.beta * s.db_deps[k - 1];
    BigReal db = s.b[k - 1] + s.beta * s.db_dbeta[k - 1];
    if (i >= 2) {
      b -= s.eps * s.b[k - 2];
      de -= s.b[k - 2] + s.eps * s.db_deps[k - 2];
      db -= s.eps * s.db_dbeta[k - 2];
    }
    if (i >= 4) {
      b += w2 * s.b[k - 4];
      de += w2 * s.db_deps[k - 4];
      db += w2 * s.db_dbeta[k - 4];
    }
    s.b.push_back(b / denom);
    s.db_deps.push_back(de / denom);
    s.db_dbeta.push_back(db / denom);
  }
  return s;
}

SeriesValue evaluate_at(const SeriesState& s, const BigReal& R) { return evaluate(s, R, true); }

BoundaryValues boundary_values(const BigReal& eps, const BigReal& delta, const BigReal& omega_x, int nu,
                               const BigReal& R, int K) {
  if (!(R > 0)) throw std::invalid_argument("boundary_values: R must be positive");
  const Precision bits = std::max(eps.precision(), delta.precision());
  const BigReal b1 = one(bits) + delta;
  const BigReal b2 = one(bits) - delta;
  const SeriesValue v1 = evaluate_at(raw_series(eps, b1, omega_x, nu, K), R);
  const SeriesValue v2 = evaluate_at(raw_series(eps, b2, omega_x, nu, K), R);
  BoundaryValues out;
  out.F1 = v1.value;
  out.F2 = v2.value;
  out.J[0][0] = v1.d_eps;
  out.J[0][1] = v1.d_beta;
  out.J[1][0] = v2.d_eps;
  out.J[1][1] = -v2.d_beta;
  out.scale1 = v1.max_term;
  out.scale2 = v2.max_term;
  return out;
}

Precision working_precision(int K, double R, int digits) {
  const double need = 6.64 * (K * std::log10(R * R) + digits + 30);
  return std::max<Precision>(512, static_cast<Precision>(std::ceil(need)));
}

std::string FmState::str() const {
  return "(" + std::to_string(n1) + "," + std::to_string(n2) + ") nu=" + std::to_string(nu);
}

FmState parse_state(const std::string& text, int nu) {
  if (text == "ground-s") return {0, 0, 0};
  if (text == "ground-t") return {1, 1, 1};
  if (text == "pair-even") return {0, 2, 0};
  if (text == "pair-odd") return {1, 3, 1};
  if (nu != 0 && nu != 1) throw std::invalid_argument("nu must be 0 or 1");
  if (text.rfind("delta0-", 0) == 0) {
    int k = std::stoi(text.substr(7));
    if (k < 1) throw std::invalid_argument("delta0 index starts at 1");
    int n = 2 * (k - 1) + nu;
    return {n, n, nu};
  }
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("unknown state: " + text);
  int a = std::stoi(text.substr(0, comma));
  int b = std::stoi(text.substr(comma + 1));
  if (a < 0 || b < 0) throw std::invalid_argument("node counts must be non-negative");
  if (a % 2 != nu || b % 2 != nu) {
    throw InvalidPairingError("node counts " + text + " do not match nu = " + std::to_string(nu));
  }
  return {std::min(a, b), std::max(a, b), nu};
}

int count_nodes(const BigReal& eps, const BigReal& beta, const BigReal& omega_x, int nu, const BigReal& R, int K,
                int samples) {
  const SeriesState s = raw_series(eps, beta, omega_x, nu, K);
  const Precision bits = s.bits;
  std::vector<double> g;  // g / eta^nu at eta_k = R k / samples
  g.reserve(static_cast<std::size_t>(samples));
  for (int k = 1; k < samples; ++k) {
    const BigReal eta = R * BigReal(Rational(k, samples), bits);
    const BigReal x = eta * eta;
    BigReal sum = s.b.back();
    for (int i = K - 1; i >= 0; --i) {
      sum *= x;
      sum += s.b[static_cast<std::size_t>(i)];
    }
    // Scaled by eta^nu so lobe heights compare fairly; the double range is
    // ample once divided by the peak below.
    g.push_back((sum * pow(eta, nu)).to_double());
  }
  // Near the wall the truncated series is of the size of its own
  // truncation error, and sign flips there are not nodes of the state.
  double peak = 0.0;
  for (double v : g) peak = std::max(peak, std::abs(v));
  std::size_t end = g.size();
  while (end > 0 && std::abs(g[end - 1]) < 1e-4 * peak) --end;
  int changes = 0;
  int last = 0;
  for (std::size_t k = 0; k < end; ++k) {
    const int sign = (g[k] > 0) - (g[k] < 0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return 2 * changes + nu;
}

FmResult solve_delta0(const BigReal& omega_x, int nu, double R, int K, std::pair<BigReal, BigReal> bracket,
                      int root_index, int digits, int scan_points) {
  const Precision bits = omega_x.precision();
  const BigReal Rb(R, bits);
  const BigReal beta = one(bits);
  auto f = [&](const BigReal& e) { return evaluate_at(raw_series(e, beta, omega_x, nu, K), Rb); };

  BigReal lo = bracket.first.with_precision(bits), hi = bracket.second.with_precision(bits);
  if (!(lo < hi)) throw std::invalid_argument("solve_delta0: empty bracket");
  if (root_index < 1) throw std::invalid_argument("solve_delta0: root_index starts at 1");

  std::vector<int> signs;
  BigReal a = lo, b = hi;
  int found = 0;
  BigReal prev_x = lo;
  int prev_sign = f(lo).value.sign();
  signs.push_back(prev_sign);
  bool located = false;
  for (int k = 1; k <= scan_points; ++k) {
    BigReal x = lo + (hi - lo) * BigReal(Rational(k, scan_points), bits);
    int sign = f(x).value.sign();
    signs.push_back(sign);
    if (!located && sign != 0 && prev_sign != 0 && sign != prev_sign) {
      if (++found == root_index) {
        a = prev_x;
        b = x;
        located = true;
      }
    }
    if (sign != 0) {
      prev_sign = sign;
      prev_x = x;
    }
  }
  if (!located) {
    throw NotFoundError("g(R; eps, 1) has " + std::to_string(found) + " sign change(s) in [" + lo.to_string(12) +
                        ", " + hi.to_string(12) + "], need " + std::to_string(root_index) + "; scan " +
                        describe_signs(signs));
  }

  // Safeguarded Newton inside [a, b].
  const BigReal tol = BigReal::from_string("1e-" + std::to_string(digits + 2), bits);
  int fa = f(a).value.sign();
  BigReal x = (a + b) / 2L;
  int iterations = 0;
  for (; iterations < 200; ++iterations) {
    SeriesValue v = f(x);
    if (v.value.is_zero()) break;
    if (v.value.sign() == fa) a = x; else b = x;
    BigReal next = x - v.value / v.d_eps;
    if (!(next > a && next < b)) next = (a + b) / 2L;
    BigReal step = abs(next - x);
    x = std::move(next);
    if (step <= tol * max(one(bits), abs(x)) || (b - a) <= tol * max(one(bits), abs(x))) break;
  }
  FmResult r;
  r.energy = x;
  r.delta = BigReal::zero(bits);
  r.K = K;
  r.R = R;
  r.bits = bits;
  r.nu = nu;
  r.iterations = iterations;
  int n = count_nodes(x, beta, omega_x, nu, Rb, K, 240);
  r.node_counts = {n, n};
  return r;
}

FmResult solve_pair(const BigReal& omega_x, int nu, double R, int K, std::pair<BigReal, BigReal> seed, int digits) {
  const Precision bits = omega_x.precision();
  const BigReal Rb(R, bits);
  const BigReal tol = BigReal::from_string("1e-" + std::to_string(digits + 2), bits);
  Vec2 x{seed.first.with_precision(bits), seed.second.with_precision(bits)};

  auto merit = [](const BoundaryValues& v, const BigReal& s1, const BigReal& s2) {
    BigReal r1 = v.F1 / s1, r2 = v.F2 / s2;
    return r1 * r1 + r2 * r2;
  };

  int it = 0;
  bool converged = false;
  BoundaryValues v = boundary_values(x.e, x.d, omega_x, nu, Rb, K);
  for (; it < 100; ++it) {
    const BigReal s1 = v.scale1, s2 = v.scale2;
    const BigReal m0 = merit(v, s1, s2);
    const BigReal det = v.J[0][0] * v.J[1][1] - v.J[0][1] * v.J[1][0];
    if (det.is_zero()) throw NotFoundError("singular Jacobian in the pair solve");
    // J (de, dd) = -(F1, F2)
    const BigReal de = (-v.F1 * v.J[1][1] + v.F2 * v.J[0][1]) / det;
    const BigReal dd = (-v.J[0][0] * v.F2 + v.J[1][0] * v.F1) / det;

    BigReal lambda = one(bits);
    Vec2 trial;
    BoundaryValues tv;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving) {
      trial = {x.e + lambda * de, x.d + lambda * dd};
      tv = boundary_values(trial.e, trial.d, omega_x, nu, Rb, K);
      if (merit(tv, s1, s2) < m0 || m0.is_zero()) {
        accepted = true;
        break;
      }
      lambda /= 2L;
    }
    const bool small_step = abs(de) <= tol * max(one(bits), abs(x.e)) && abs(dd) <= tol * max(one(bits), abs(x.d));
    if (!accepted) {
      // No decrease left to find: the residual sits at the rounding floor.
      if (small_step) {
        converged = true;
        break;
      }
      throw NotFoundError("damped Newton stalled at eps = " + x.e.to_string(15) + ", delta = " + x.d.to_string(15));
    }
    x = std::move(trial);
    v = std::move(tv);
    const bool small_residual = abs(v.F1) <= tol * v.scale1 && abs(v.F2) <= tol * v.scale2;
    if (small_step && lambda == 1 && small_residual) {
      converged = true;
      ++it;
      break;
    }
  }
  if (!converged) throw NotFoundError("pair solve did not converge in 100 Newton steps");
  if (abs(x.d) < BigReal::from_string("1e-10", bits)) {
    throw NotFoundError("pair solve collapsed to delta = 0; use the delta = 0 solver");
  }

  FmResult r;
  r.energy = x.e;
  r.delta = x.d;
  r.K = K;
  r.R = R;
  r.bits = bits;
  r.nu = nu;
  r.iterations = it;
  const BigReal ad = abs(x.d);
  r.node_counts = {count_nodes(x.e, one(bits) + ad, omega_x, nu, Rb, K, 240),
                   count_nodes(x.e, one(bits) - ad, omega_x, nu, Rb, K, 240)};
  return r;
}

std::vector<Seed> scan_seeds(const BigReal& omega_x, int nu, double R, int K, std::pair<double, double> eps_range,
                             std::pair<double, double> delta_range, int grid) {
  if (grid < 1) throw std::invalid_argument("scan_seeds: grid must be >= 1");
  if (!(eps_range.first < eps_range.second) || !(delta_range.first < delta_range.second)) {
    throw std::invalid_argument("scan_seeds: empty range");
  }
  const Precision bits = omega_x.precision();
  const BigReal Rb(R, bits);
  const BigReal w2 = omega_x * omega_x;
  const int n = grid + 1;
  auto eps_at = [&](int i) { return eps_range.first + (eps_range.second - eps_range.first) * i / grid; };
  auto delta_at = [&](int j) { return delta_range.first + (delta_range.second - delta_range.first) * j / grid; };

  // Sign of g(R; eps, beta) on the grid of beta = 1 +- delta values.
  std::vector<int> s1(static_cast<std::size_t>(n * n)), s2(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    const BigReal e(eps_at(i), bits);
    for (int j = 0; j < n; ++j) {
      const BigReal d(delta_at(j), bits);
      const auto k = static_cast<std::size_t>(i * n + j);
      s1[k] = series_sign_value(e, one(bits) + d, w2, nu, K, Rb).sign();
      s2[k] = series_sign_value(e, one(bits) - d, w2, nu, K, Rb).sign();
    }
  }
  auto changes = [&](const std::vector<int>& s, int i, int j) {
    bool pos = false, neg = false;
    for (int di = 0; di <= 1; ++di) {
      for (int dj = 0; dj <= 1; ++dj) {
        int v = s[static_cast<std::size_t>((i + di) * n + j + dj)];
        pos |= v > 0;
        neg |= v < 0;
      }
    }
    return pos && neg;
  };
  std::vector<Seed> out;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      if (changes(s1, i, j) && changes(s2, i, j)) {
        out.push_back({(eps_at(i) + eps_at(i + 1)) / 2, (delta_at(j) + delta_at(j + 1)) / 2});
      }
    }
  }
  return out;
}

Seed separated_seed(double omega_x, const FmState& state, double R, int grid) {
  if (grid % 2 != 0) ++grid;  // the sine grid wants an odd interval count
  const int N = grid + 1;
  const Eigen::MatrixXd t = dvr::kinetic_1d(R, N);
  const dvr::DvrGrid g = dvr::make_grid(R, N);
  const Eigen::ArrayXd x2 = g.x.array().square();
  const Eigen::ArrayXd x6 = x2.cube();
  const double w2 = omega_x * omega_x;
  auto levels = [&](double eps) {
    Eigen::MatrixXd h = t;
    h.diagonal().array() += -eps * x2 + w2 * x6;
    auto r = numkit::sym_eigen(h, state.n2 + 1);
    return std::pair{r.values[state.n1], r.values[state.n2]};
  };
  // beta_n = -E_n; E_n falls monotonically with eps.
  auto f = [&](double eps) {
    auto [e1, e2] = levels(eps);
    return e1 + e2 + 2.0;
  };
  double lo = 0.0, hi = 1.0;
  while (f(hi) > 0) {
    lo = hi;
    hi *= 2;
    if (hi > 1e6) throw NotFoundError("no separated estimate for state " + state.str());
  }
  boost::uintmax_t max_iter = 200;
  auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(50),
                                                  max_iter);
  const double eps = (a + b) / 2;
  auto [e1, e2] = levels(eps);
  return {eps, state.delta_zero() ? 0.0 : (e2 - e1) / 2};
}

int agreeing_digits(const BigReal& a, const BigReal& b) {
  if (a == b) return 60;
  const BigReal scale = max(abs(a), abs(b));
  if (scale.is_zero()) return 60;
  const double rel = (abs(a - b) / scale).to_double();
  if (rel >= 1) return 0;
  if (rel == 0) return 60;
  return std::clamp(static_cast<int>(std::floor(-std::log10(rel))), 0, 60);
}

FmResult solve_rung(const ExactReal& omega_x, const FmState& state, int K, double R, int digits,
                    std::optional<std::pair<BigReal, BigReal>> seed, std::optional<Precision> bits) {
  const Precision p = bits.value_or(working_precision(K, R, digits));
  const BigReal w = omega_x.value(p);
  if (!seed) {
    Seed s = separated_seed(omega_x.to_double(), state, R);
    seed = std::pair{BigReal(s.eps, p), BigReal(s.delta, p)};
  }
  if (!state.delta_zero()) {
    FmResult r = solve_pair(w, state.nu, R, K, *seed, digits);
    r.delta = abs(r.delta);
    return r;
  }
  // Walk outward from the seed until g(R; eps, 1) changes sign.
  const BigReal Rb(R, p);
  const BigReal e0 = seed->first.with_precision(p);
  auto sign_at = [&](const BigReal& e) {
    return evaluate_at(raw_series(e, one(p), w, state.nu, K), Rb).value.sign();
  };
  const int s0 = sign_at(e0);
  const BigReal limit = abs(e0) / 2L;
  BigReal h = max(abs(e0), one(p)) * BigReal::from_string("1e-9", p);
  while (h <= limit) {
    if (s0 == 0) return solve_delta0(w, state.nu, R, K, {e0 - h, e0 + h}, 1, digits, 2);
    if (sign_at(e0 - h) == -s0) return solve_delta0(w, state.nu, R, K, {e0 - h, e0}, 1, digits, 4);
    if (sign_at(e0 + h) == -s0) return solve_delta0(w, state.nu, R, K, {e0, e0 + h}, 1, digits, 4);
    h *= 4L;
  }
  throw NotFoundError("no zero of g(R; eps, 1) near eps = " + e0.to_string(12) + " at K = " + std::to_string(K) +
                      ", R = " + std::to_string(R));
}

Convergence converge(const ExactReal& omega_x, const FmState& state, int digits, const LadderOptions& opt) {
  if (omega_x.compare(0) <= 0) throw std::invalid_argument("omega_x must be positive");
  if (digits < 1 || digits > 60) throw std::invalid_argument("target digits must be in 1..60");
  const double w = omega_x.to_double();
  const double R0 = opt.R0.value_or(5.0 * std::pow(16.0 * w, -0.25));
  const double dR = opt.dR.value_or(R0 / 10.0);

  Convergence out;
  std::optional<std::pair<BigReal, BigReal>> seed;
  for (int j = 0; j < opt.max_rungs; ++j) {
    const int K = opt.K0 + j * opt.dK;
    const double R = R0 + (j / 2) * dR;
    FmResult r = solve_rung(omega_x, state, K, R, digits, seed);
    seed = std::pair{r.energy, r.delta};
    FmRung rung{K, R, r.bits, r.energy, r.delta, 0};
    if (!out.trace.empty()) {
      const FmRung& prev = out.trace.back();
      rung.agreeing_digits = agreeing_digits(prev.energy, r.energy);
      if (!state.delta_zero()) rung.agreeing_digits = std::min(rung.agreeing_digits, agreeing_digits(prev.delta, r.delta));
    }
    out.trace.push_back(rung);
    out.result = std::move(r);
    const std::size_t n = out.trace.size();
    if (n >= 3 && out.trace[n - 1].agreeing_digits >= digits && out.trace[n - 2].agreeing_digits >= digits) break;
    if (j + 1 == opt.max_rungs) {
      std::ostringstream msg;
      msg << "ladder did not reach " << digits << " digits for " << state.str() << " in " << opt.max_rungs
          << " rungs; last K = " << K << ", R = " << R << ", eps = " << out.result.energy.to_string(20);
      throw InsufficientPrecisionError(msg.str());
    }
  }
  const std::size_t n = out.trace.size();
  out.result.converged_digits = std::min(out.trace[n - 1].agreeing_digits, out.trace[n - 2].agreeing_digits);

  if (out.result.node_counts != std::pair{state.n1, state.n2}) {
    throw FmError("converged to a state with nodes (" + std::to_string(out.result.node_counts.first) + "," +
                  std::to_string(out.result.node_counts.second) + "), expected " + state.str());
  }

  if (opt.verify_doubled) {
    const FmRung& last = out.trace.back();
    FmResult again = solve_rung(omega_x, state, last.K, last.R, digits, std::pair{last.energy, last.delta},
                                2 * last.bits);
    int agree = agreeing_digits(again.energy, last.energy);
    if (!state.delta_zero()) agree = std::min(agree, agreeing_digits(again.delta, last.delta));
    out.doubled_precision_agrees = agree >= digits;
    if (!out.doubled_precision_agrees) {
      throw InsufficientPrecisionError("doubling the precision moved the result below " + std::to_string(digits) +
                                       " agreeing digits");
    }
  }
  return out;
}

const std::vector<FmState>& table3_columns() {
  static const std::vector<FmState> cols{{0, 0, 0}, {1, 1, 1}, {0, 2, 0}, {1, 3, 1}};
  return cols;
}

std::vector<ExactReal> table3_frequencies() {
  std::vector<ExactReal> out;
  for (auto q : {Rational(1, 64), Rational(1, 32), Rational(1, 24), Rational(1, 16), Rational(1, 8), Rational(1, 6),
                 Rational(1, 2), Rational(1), Rational(2)}) {
    out.emplace_back(q);
  }
  return out;
}

Level to_level(const FmResult& r, int digits) {
  Level level;
  level.energy = r.energy.to_double();
  level.delta = r.delta.is_zero() ? 0.0 : std::abs(r.delta.to_double());
  level.node_counts = r.node_counts;
  level.sectors = level_sectors(r.node_counts.first, r.node_counts.second, level.delta);
  level.method = Method::fm;
  level.params.K = r.K;
  level.params.R = r.R;
  level.params.precision_bits = static_cast<int>(r.bits);
  level.accuracy_digits = digits;
  return level;
}

namespace {

const std::vector<exactalg::QuasiExactSolution>& exact_catalog() {
  static const std::vector<exactalg::QuasiExactSolution> cat = exactalg::catalog(3);
  return cat;
}

bool same_value(const ExactReal& a, const ExactReal& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  return agreeing_digits(a.value(256), b.value(256)) >= 50;
}

}  // namespace

const exactalg::QuasiExactSolution* exact_match(const ExactReal& omega_x, const FmState& state) {
  for (const auto& sol : exact_catalog()) {
    if (sol.nu != state.nu || sol.degenerate() == state.delta_zero()) continue;
    auto [a, b] = sol.node_counts;
    if (std::min(a, b) != state.n1 || std::max(a, b) != state.n2) continue;
    if (same_value(sol.omega_x, omega_x)) return &sol;
  }
  return nullptr;
}

std::vector<Table3Row> table3(const std::vector<ExactReal>& omegas, int digits, int threads) {
  const auto& cols = table3_columns();
  exact_catalog();  // build once before the workers start
  std::vector<Table3Row> rows;
  for (const auto& w : omegas) rows.push_back({w, std::vector<Table3Cell>(cols.size())});

  const std::size_t jobs = rows.size() * cols.size();
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < jobs; k = next++) {
      Table3Row& row = rows[k / cols.size()];
      Table3Cell& cell = row.cells[k % cols.size()];
      const FmState& state = cols[k % cols.size()];
      const auto* exact = exact_match(row.omega_x, state);
      const int target = exact ? std::max(digits, 14) : digits;
      try {
        Convergence c = converge(row.omega_x, state, target);
        Level level = to_level(c.result, digits);
        if (exact) level.exact_energy = exact->energy.str();
        cell.level = std::move(level);
        cell.convergence = std::move(c);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
    }
  };
  unsigned n = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(jobs));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace qdot::fm
