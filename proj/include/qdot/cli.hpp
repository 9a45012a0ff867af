#pragma once

// Commands behind the `qdot` executable. Each returns a string table that
// is written as CSV (header row, RFC 4180 quoting) or JSON
// ({"command", "columns", "rows"}). Failed table cells hold "ERROR".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdot/numkit/exact_real.hpp"

namespace qdot::cli {

struct OutputTable {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  int error_cells() const;
  friend bool operator==(const OutputTable&, const OutputTable&) = default;
};

enum class Format { csv, json };

std::string to_csv(const OutputTable& t);
/// Header row becomes the columns; `command` is left empty.
OutputTable parse_csv(std::string_view text);
std::string to_json(const OutputTable& t);
OutputTable parse_json(std::string_view text);
std::string render(const OutputTable& t, Format f);

/// 17 significant digits.
std::string format_float(double v);

/// "p/q", a decimal, or the closed form of a quasi-exact frequency such as
/// "(5+2*sqrt(5))/120". Decimals are read exactly.
numkit::ExactReal parse_omega(const std::string& text);

/// 0 when every cell was computed, 2 when some are ERROR.
int exit_code(const OutputTable& t);

OutputTable cmd_exact(int n_max);

struct FmOptions {
  std::string omega_x = "1/16";
  std::string state = "ground-s";
  int nu = 0;
  int digits = 8;
  // Both set: one rung at (K, R) instead of the ladder.
  std::optional<int> K;
  std::optional<double> R;
  std::optional<int> precision_bits;
};

/// Ladder trace rows ("rung") followed by one "final" row.
OutputTable cmd_fm(const FmOptions& opt);

struct TableOptions {
  int digits = 8;   // table 3
  int threads = 0;  // 0: all cores
};

OutputTable cmd_table(int which, const TableOptions& opt = {});

/// RR levels per sector: omega_y,sector,level_index,energy over [from, to] by step.
OutputTable cmd_scan(double omega_x, double from, double to, double step, int levels, int D);

/// FM ground energy on a log grid of wx plus the quasi-exact
/// ground states inside the range.
OutputTable cmd_ground_curve(double from, double to, int points, int digits, int threads = 0);

struct PsiOptions {
  std::string omega_x = "1/32";
  std::optional<int> nu;
  std::optional<std::string> mode;  // product | plus | minus
  double x_min = -15, x_max = 15, y_min = -15, y_max = 15;
  int n = 121;
};

/// Normalized wavefunction: x,y,psi on a uniform grid.
OutputTable cmd_psi(const PsiOptions& opt);

}  // namespace qdot::cli
