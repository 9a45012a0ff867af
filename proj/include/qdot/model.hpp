#pragma once

// Shared vocabulary for the relative-motion problem
//
//   [-d^2/dx^2 - d^2/dy^2 + wx^2 x^2 + wy^2 y^2 + 1/rho] psi = eps psi,
//
// with wy = 2 wx throughout. Energies are in effective Rydbergs and lengths
// in effective Bohr radii; eps is the relative-motion energy only.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdot/numkit/exact_real.hpp"

namespace qdot {

struct InvalidPairingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Parity { even, odd };
enum class Spin { singlet, triplet };

inline Parity parity_of(int n) { return n % 2 == 0 ? Parity::even : Parity::odd; }
inline int sign_of(Parity p) { return p == Parity::even ? 1 : -1; }
inline char symbol(Parity p) { return p == Parity::even ? '+' : '-'; }

/// (x, y)-parity of a state. Spin follows from inversion parity:
/// (+,+) and (-,-) are singlets, (+,-) and (-,+) triplets.
struct SectorLabel {
  Parity x = Parity::even;
  Parity y = Parity::even;

  Spin spin() const { return x == y ? Spin::singlet : Spin::triplet; }
  int inversion_parity() const { return sign_of(x) * sign_of(y); }
  /// "(+,-)"
  std::string str() const;
  /// "s" or "t"
  std::string spin_str() const { return spin() == Spin::singlet ? "s" : "t"; }

  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
};

/// Parses "(+,-)", "+-", "pm" style sector strings.
SectorLabel parse_sector(const std::string& text);

/// Problem instance: wx > 0 (wy = 2 wx) and the parity index of the
/// separated factors.
struct DotSpec {
  numkit::ExactReal omega_x;
  int nu = 0;
};

/// Validates wx > 0 and nu in {0, 1}.
DotSpec make_dot_spec(numkit::ExactReal omega_x, int nu);

enum class Method { exact, fm, rr, dvr };
std::string to_string(Method m);

/// Method parameters as quoted in table headers.
struct MethodParams {
  std::optional<int> K;
  std::optional<double> R;
  std::optional<int> precision_bits;
  std::optional<int> D;
  std::optional<int> N;
};

/// One bound state.
struct Level {
  double energy = 0.0;
  double delta = 0.0;                    // |delta|; nonzero marks a degenerate pair
  std::vector<SectorLabel> sectors;      // one label, or two for a pair
  std::optional<std::pair<int, int>> node_counts;
  Method method = Method::exact;
  MethodParams params;
  int accuracy_digits = 0;
  std::optional<std::string> exact_energy;  // closed form when known

  bool degenerate() const { return delta != 0.0; }
};

/// Sector of the product / combination built from factors with n1 and n2
/// nodes. For delta == 0 the sign is ignored; for delta != 0 `plus`
/// selects psi_(+). Throws InvalidPairingError when n1 and n2 differ in
/// parity.
SectorLabel classify_sector(int n1, int n2, double delta, bool plus);

/// Both members of a degenerate pair ((+) first), or the single label of a
/// nondegenerate level.
std::vector<SectorLabel> level_sectors(int n1, int n2, double delta);

}  // namespace qdot
