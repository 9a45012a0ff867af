// qdot: tables and figure data for the wy = 2 wx two-electron dot.
//
//   qdot exact --n-max 3
//   qdot fm --omega-x 1/16 --state pair-even --digits 10
//   qdot table 3 --format json --out table3.json
//   qdot scan --omega-x 0.5 --from 0.25 --to 1.25 --step 0.05
//   qdot ground-curve --from 1/64 --to 2 --points 25
//   qdot psi --omega-x 1/32 --mode minus --n 201
//
// Exit status: 0 success, 2 table with ERROR cells, 1 failure.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qdot/cli.hpp"

using namespace qdot;

int main(int argc, char** argv) {
  CLI::App app{"Two-electron anisotropic quantum dot solver"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string out_path;
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output file (default stdout)");

  int n_max = 3;
  auto* exact = app.add_subcommand("exact", "quasi-exact solutions");
  exact->add_option("--n-max", n_max, "largest truncation order")->check(CLI::PositiveNumber);

  cli::FmOptions fm;
  int K = 0, bits = 0;
  double R = 0;
  auto* fmc = app.add_subcommand("fm", "power-series solution with walls; ladder trace and final level");
  fmc->add_option("--omega-x", fm.omega_x, "p/q, decimal or closed form")->required();
  fmc->add_option("--state", fm.state, "ground-s, ground-t, pair-even, pair-odd, delta0-<k> or n1,n2");
  fmc->add_option("--nu", fm.nu, "parity index for delta0-<k> and node pairs")->check(CLI::Range(0, 1));
  fmc->add_option("--digits", fm.digits, "target significant digits");
  auto* k_opt = fmc->add_option("--K", K, "single rung: truncation order");
  auto* r_opt = fmc->add_option("--R", R, "single rung: wall position");
  auto* p_opt = fmc->add_option("--precision-bits", bits, "single rung: working precision");

  int which = 0;
  cli::TableOptions topt;
  auto* table = app.add_subcommand("table", "tables 1..5");
  table->add_option("which", which, "table number")->required()->check(CLI::Range(1, 5));
  table->add_option("--digits", topt.digits, "Table 3 digits");
  table->add_option("--threads", topt.threads, "worker threads (0: all cores)");

  std::string scan_w = "1/2", scan_from = "1/4", scan_to = "5/4", scan_step = "1/20";
  int scan_levels = 4, scan_D = 144;
  auto* scan = app.add_subcommand("scan", "RR levels per sector against omega_y");
  scan->add_option("--omega-x", scan_w);
  scan->add_option("--from", scan_from);
  scan->add_option("--to", scan_to);
  scan->add_option("--step", scan_step);
  scan->add_option("--levels", scan_levels)->check(CLI::PositiveNumber);
  scan->add_option("--D", scan_D, "basis dimension per sector (square)");

  std::string gc_from = "1/64", gc_to = "2";
  int gc_points = 25, gc_digits = 8, gc_threads = 0;
  auto* gc = app.add_subcommand("ground-curve", "FM ground energy against ln wx with exact points");
  gc->add_option("--from", gc_from);
  gc->add_option("--to", gc_to);
  gc->add_option("--points", gc_points)->check(CLI::PositiveNumber);
  gc->add_option("--digits", gc_digits);
  gc->add_option("--threads", gc_threads);

  cli::PsiOptions psi;
  int psi_nu = 0;
  std::string psi_mode;
  std::vector<double> box;
  auto* psic = app.add_subcommand("psi", "normalized closed-form wavefunction on a grid");
  psic->add_option("--omega-x", psi.omega_x)->required();
  auto* psi_nu_opt = psic->add_option("--nu", psi_nu)->check(CLI::Range(0, 1));
  psic->add_option("--mode", psi_mode, "product, plus or minus")->check(CLI::IsMember({"product", "plus", "minus"}));
  psic->add_option("--box", box, "x_min x_max y_min y_max")->expected(4);
  psic->add_option("--n", psi.n, "points per axis")->check(CLI::Range(2, 5001));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    cli::OutputTable result;
    if (*exact) {
      result = cli::cmd_exact(n_max);
    } else if (*fmc) {
      if (*k_opt) fm.K = K;
      if (*r_opt) fm.R = R;
      if (*p_opt) fm.precision_bits = bits;
      result = cli::cmd_fm(fm);
    } else if (*table) {
      result = cli::cmd_table(which, topt);
    } else if (*scan) {
      auto d = [](const std::string& s) { return cli::parse_omega(s).to_double(); };
      result = cli::cmd_scan(d(scan_w), d(scan_from), d(scan_to), d(scan_step), scan_levels, scan_D);
    } else if (*gc) {
      auto d = [](const std::string& s) { return cli::parse_omega(s).to_double(); };
      result = cli::cmd_ground_curve(d(gc_from), d(gc_to), gc_points, gc_digits, gc_threads);
    } else if (*psic) {
      if (*psi_nu_opt) psi.nu = psi_nu;
      if (!psi_mode.empty()) psi.mode = psi_mode;
      if (box.size() == 4) {
        psi.x_min = box[0];
        psi.x_max = box[1];
        psi.y_min = box[2];
        psi.y_max = box[3];
      }
      result = cli::cmd_psi(psi);
    }

    const std::string text = cli::render(result, format == "json" ? cli::Format::json : cli::Format::csv);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + out_path);
      f << text;
    }
    return cli::exit_code(result);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
