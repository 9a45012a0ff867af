#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qdot/cli.hpp"
#include "qdot/dvrsolver.hpp"
#include "qdot/exactalg.hpp"
#include "qdot/frobenius.hpp"
#include "qdot/numkit/roots.hpp"
#include "qdot/rrsolver.hpp"
#include "qdot/wavefield.hpp"

namespace qdot::cli {

using numkit::BigReal;
using numkit::ExactReal;
using numkit::Rational;

namespace {

// `digits` significant digits in fixed notation.
std::string sig_fixed(const BigReal& v, int digits) {
  if (v.is_zero()) return "0";
  const int e = static_cast<int>(std::floor(std::log10(std::abs(v.to_double()))));
  return v.to_fixed(std::max(0, digits - 1 - e));
}

// Closed form when there is one, else 20 digits.
std::string exact_str(const ExactReal& v) { return v.closed_form().value_or(sig_fixed(v.value(256), 20)); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

template <typename F>
void parallel_for(std::size_t count, int threads, F&& body) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < count; k = next++) body(k);
  };
  unsigned n = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

const std::vector<exactalg::QuasiExactSolution>& catalog3() {
  static const auto cat = exactalg::catalog(3);
  return cat;
}

bool same_value(const ExactReal& a, const ExactReal& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  return fm::agreeing_digits(a.value(256), b.value(256)) >= 50;
}

}  // namespace

ExactReal parse_omega(const std::string& text) {
  if (text.find("sqrt") != std::string::npos) {
    for (const auto& s : catalog3())
      if (s.omega_x.closed_form() == text) return s.omega_x;
    throw std::invalid_argument("unknown algebraic frequency " + text);
  }
  Rational q = numkit::parse_rational(text);
  if (q <= 0) throw std::invalid_argument("omega_x must be positive");
  return ExactReal(q);
}

OutputTable cmd_exact(int n_max) {
  if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
  OutputTable t{"exact",
                {"n", "nu", "omega_x", "omega_x_decimal", "spin", "parity", "delta", "energy", "energy_decimal", "n1",
                 "n2"},
                {}};
  for (const auto& s : exactalg::catalog(n_max)) {
    std::vector<std::string> spins, parities;
    for (const auto& l : s.sectors) {
      spins.push_back(l.spin_str());
      parities.push_back(l.str());
    }
    t.rows.push_back({std::to_string(s.n), std::to_string(s.nu), exact_str(s.omega_x),
                      sig_fixed(s.omega_x.value(256), 20), join(spins), join(parities),
                      s.degenerate() ? exact_str(s.delta) : "0", exact_str(s.energy), sig_fixed(s.energy.value(256), 20),
                      std::to_string(s.node_counts.first), std::to_string(s.node_counts.second)});
  }
  return t;
}

OutputTable cmd_fm(const FmOptions& opt) {
  if (opt.digits < 1 || opt.digits > 40) throw std::invalid_argument("--digits must be in 1..40");
  const ExactReal w = parse_omega(opt.omega_x);
  const fm::FmState state = fm::parse_state(opt.state, opt.nu);
  const auto* exact = fm::exact_match(w, state);
  const std::string exact_str = exact ? exact->energy.str() : "";

  OutputTable t{"fm", {"stage", "K", "R", "bits", "energy", "delta", "digits", "n1", "n2", "verified", "exact"}, {}};
  auto row = [&](const std::string& stage, int K, double R, long bits, const BigReal& e, const BigReal& d, int digits,
                 std::optional<std::pair<int, int>> nodes, const std::string& verified) {
    t.rows.push_back({stage, std::to_string(K), format_float(R), std::to_string(bits), sig_fixed(e, digits),
                      sig_fixed(abs(d), digits), std::to_string(digits), nodes ? std::to_string(nodes->first) : "",
                      nodes ? std::to_string(nodes->second) : "", verified, stage == "final" ? exact_str : ""});
  };

  if (opt.K.has_value() != opt.R.has_value()) throw std::invalid_argument("--K and --R go together");
  if (opt.K) {
    std::optional<numkit::Precision> bits;
    if (opt.precision_bits) bits = *opt.precision_bits;
    auto r = fm::solve_rung(w, state, *opt.K, *opt.R, opt.digits, std::nullopt, bits);
    row("final", r.K, r.R, static_cast<long>(r.bits), r.energy, r.delta, opt.digits, r.node_counts, "");
    return t;
  }
  auto conv = fm::converge(w, state, opt.digits);
  for (const auto& g : conv.trace)
    row("rung", g.K, g.R, static_cast<long>(g.bits), g.energy, g.delta, opt.digits + 2, std::nullopt, "");
  const auto& r = conv.result;
  row("final", r.K, r.R, static_cast<long>(r.bits), r.energy, r.delta, r.converged_digits, r.node_counts,
      conv.doubled_precision_agrees ? "yes" : "no");
  return t;
}

namespace {

OutputTable table2() {
  struct Rung {
    int K;
    double R;
  };
  static const Rung rungs[] = {{60, 5}, {70, 5}, {90, 5.5}, {100, 5.5}, {120, 5.5}, {140, 6}};
  OutputTable t{"table 2", {"K", "R", "energy", "delta", "bits"}, {}};
  const ExactReal w(Rational(1, 16));
  const fm::FmState pair{0, 2, 0};
  std::optional<std::pair<BigReal, BigReal>> seed;
  for (const auto& g : rungs) {
    try {
      auto r = fm::solve_rung(w, pair, g.K, g.R, 14, seed);
      seed = std::pair{r.energy, r.delta};
      t.rows.push_back({std::to_string(g.K), format_float(g.R), r.energy.to_fixed(10), r.delta.to_fixed(9),
                        std::to_string(r.bits)});
    } catch (const std::exception&) {
      t.rows.push_back({std::to_string(g.K), format_float(g.R), "ERROR", "ERROR", ""});
    }
  }
  return t;
}

OutputTable table3(const TableOptions& opt) {
  OutputTable t{"table 3",
                {"omega_x", "e_pp", "e_mp", "e_pair_even", "e_pair_odd", "exact_pp", "exact_mp", "exact_pair_even",
                 "exact_pair_odd"},
                {}};
  for (const auto& row : fm::table3(fm::table3_frequencies(), opt.digits, opt.threads)) {
    std::vector<std::string> energies, exact;
    for (const auto& c : row.cells) {
      if (c.level && c.convergence) {
        energies.push_back(sig_fixed(c.convergence->result.energy, opt.digits));
        exact.push_back(c.level->exact_energy.value_or(""));
      } else {
        energies.push_back("ERROR");
        exact.push_back("");
      }
    }
    std::vector<std::string> r{row.omega_x.str()};
    r.insert(r.end(), energies.begin(), energies.end());
    r.insert(r.end(), exact.begin(), exact.end());
    t.rows.push_back(std::move(r));
  }
  return t;
}

OutputTable table4() {
  OutputTable t{"table 4", {"D", "pp_0", "mp_0", "pp_1", "pm_0", "mm_0", "mp_1"}, {}};
  for (int D : {25, 64, 144, 256}) {
    std::vector<std::string> r{std::to_string(D)};
    try {
      const auto rows = rr::table4(1.0 / 64, {D});
      for (const auto& l : rows.front().levels) r.push_back(format_float(l.energy));
    } catch (const std::exception&) {
      r.resize(1);
      r.resize(7, "ERROR");
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

OutputTable table5() {
  static const std::pair<int, double> grid[] = {{256, 30}, {400, 30}, {400, 35}, {576, 35}, {900, 35}, {900, 40}};
  OutputTable t{"table 5", {"d", "R", "e1", "e2", "e3", "e4", "e5", "e6", "sectors"}, {}};
  for (auto [d, R] : grid) {
    std::vector<std::string> r{std::to_string(d), format_float(R)};
    try {
      std::vector<std::string> sectors;
      for (const auto& l : dvr::spectrum(R, dvr::grid_intervals(d), 1.0 / 64, 6)) {
        r.push_back(format_float(l.energy));
        sectors.push_back(l.sectors.front().str());
      }
      r.push_back(join(sectors));
    } catch (const std::exception&) {
      r.resize(2);
      r.resize(9, "ERROR");
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace

OutputTable cmd_table(int which, const TableOptions& opt) {
  switch (which) {
    case 1: {
      OutputTable t = cmd_exact(3);
      t.command = "table 1";
      return t;
    }
    case 2:
      return table2();
    case 3:
      return table3(opt);
    case 4:
      return table4();
    case 5:
      return table5();
    default:
      throw std::invalid_argument("table must be 1..5");
  }
}

OutputTable cmd_scan(double omega_x, double from, double to, double step, int levels, int D) {
  if (!(step > 0)) throw std::invalid_argument("--step must be positive");
  std::vector<double> grid;
  if (to >= from) {
    const int n = static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
    for (int i = 0; i < n; ++i) grid.push_back(from + i * step);
  }
  OutputTable t{"scan", {"omega_y", "sector", "level_index", "energy"}, {}};
  for (const auto& p : rr::scan_omega_y(omega_x, grid, levels, D))
    t.rows.push_back({format_float(p.omega_y), p.sector.str(), std::to_string(p.level_index), format_float(p.energy)});
  return t;
}

OutputTable cmd_ground_curve(double from, double to, int points, int digits, int threads) {
  if (!(from > 0) || !(to >= from)) throw std::invalid_argument("ground-curve needs 0 < from <= to");
  if (points < 1) throw std::invalid_argument("--points must be >= 1");
  auto inside = [&](double w) { return w >= from * (1 - 1e-12) && w <= to * (1 + 1e-12); };
  std::vector<const exactalg::QuasiExactSolution*> crosses;
  for (const auto& s : catalog3())
    if (s.nu == 0 && !s.degenerate() && s.node_counts == std::pair{0, 0} && inside(s.omega_x.to_double()))
      crosses.push_back(&s);

  // Log grid (as nearby simple fractions) plus the cross frequencies.
  std::vector<ExactReal> grid;
  for (int i = 0; i < points; ++i) {
    const double w = points == 1 ? from : std::exp(std::log(from) + i * (std::log(to) - std::log(from)) / (points - 1));
    grid.emplace_back(numkit::simplest_rational(Rational(w * (1 - 1e-12)), Rational(w * (1 + 1e-12))));
  }
  for (const auto* c : crosses) grid.push_back(c->omega_x);
  std::sort(grid.begin(), grid.end(), [](const ExactReal& a, const ExactReal& b) { return a.to_double() < b.to_double(); });
  grid.erase(std::unique(grid.begin(), grid.end(), same_value), grid.end());

  std::vector<std::vector<std::string>> rows(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t k) {
    std::string energy = "ERROR";
    try {
      energy = sig_fixed(fm::converge(grid[k], fm::FmState{0, 0, 0}, digits).result.energy, digits);
    } catch (const std::exception&) {
    }
    const double w = grid[k].to_double();
    rows[k] = {format_float(w), format_float(std::log(w)), energy, "fm", grid[k].str(), ""};
  });
  OutputTable t{"ground-curve", {"omega_x", "ln_omega_x", "energy", "kind", "omega_x_exact", "energy_exact"},
                std::move(rows)};
  for (const auto* c : crosses) {
    const double w = c->omega_x.to_double();
    t.rows.push_back({format_float(w), format_float(std::log(w)), sig_fixed(c->energy.value(256), digits), "exact",
                      exact_str(c->omega_x), exact_str(c->energy)});
  }
  return t;
}

OutputTable cmd_psi(const PsiOptions& opt) {
  const ExactReal w = parse_omega(opt.omega_x);
  std::vector<const exactalg::QuasiExactSolution*> hits;
  for (const auto& s : catalog3())
    if ((!opt.nu || s.nu == *opt.nu) && same_value(s.omega_x, w)) hits.push_back(&s);
  if (hits.empty()) throw std::invalid_argument("no quasi-exact solution at wx = " + opt.omega_x);
  if (hits.size() > 1) throw std::invalid_argument("several solutions at wx = " + opt.omega_x + "; pass --nu");
  const auto& sol = *hits.front();

  wave::Combination mode = sol.degenerate() ? wave::Combination::plus : wave::Combination::product;
  if (opt.mode) {
    if (*opt.mode == "plus") mode = wave::Combination::plus;
    else if (*opt.mode == "minus") mode = wave::Combination::minus;
    else if (*opt.mode == "product") mode = wave::Combination::product;
    else throw std::invalid_argument("--mode must be product, plus or minus");
  }
  const auto wf = wave::make_wavefunction(sol, mode);
  const auto g = wave::sample_grid(wf, {opt.x_min, opt.x_max, opt.y_min, opt.y_max}, opt.n);
  OutputTable t{"psi", {"x", "y", "psi"}, {}};
  for (std::size_t i = 0; i < g.psi.size(); ++i)
    t.rows.push_back({format_float(g.x[i]), format_float(g.y[i]), format_float(g.psi[i])});
  return t;
}

}  // namespace qdot::cli
