#include "qdot/model.hpp"

#include <algorithm>
#include <cctype>

namespace qdot {

std::string SectorLabel::str() const { return std::string("(") + symbol(x) + "," + symbol(y) + ")"; }

SectorLabel parse_sector(const std::string& text) {
  std::string signs;
  for (char c : text) {
    if (c == '+' || c == 'p' || c == 'P') signs += '+';
    if (c == '-' || c == 'm' || c == 'M') signs += '-';
  }
  if (signs.size() != 2) throw std::invalid_argument("malformed sector: " + text);
  auto parity = [](char c) { return c == '+' ? Parity::even : Parity::odd; };
  return {parity(signs[0]), parity(signs[1])};
}

DotSpec make_dot_spec(numkit::ExactReal omega_x, int nu) {
  if (omega_x.compare(0) <= 0) throw std::invalid_argument("omega_x must be positive");
  if (nu != 0 && nu != 1) throw std::invalid_argument("nu must be 0 or 1");
  return {std::move(omega_x), nu};
}

std::string to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::fm: return "FM";
    case Method::rr: return "RR";
    case Method::dvr: return "DVR";
  }
  return "?";
}

SectorLabel classify_sector(int n1, int n2, double delta, bool plus) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("node counts must be non-negative");
  if ((n1 - n2) % 2 != 0) {
    throw InvalidPairingError("factors with " + std::to_string(n1) + " and " + std::to_string(n2) +
                              " nodes differ in parity");
  }
  const Parity factor = parity_of(n1);
  // Odd factors make the state odd in x; the y-parity is the sign of the
  // combination (products are always even in y).
  const Parity y = (delta == 0.0 || plus) ? Parity::even : Parity::odd;
  return {factor, y};
}

std::vector<SectorLabel> level_sectors(int n1, int n2, double delta) {
  if (delta == 0.0) return {classify_sector(n1, n2, delta, true)};
  return {classify_sector(n1, n2, delta, true), classify_sector(n1, n2, delta, false)};
}

}  // namespace qdot
