#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdot/numkit/bigreal.hpp"
#include "qdot/numkit/rational.hpp"

namespace qdot::numkit {

/// Thrown for zero or otherwise degenerate polynomial input.
struct DegenerateInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial over Q, coefficients stored low to high.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> coeffs);
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;
  BigReal operator()(const BigReal& x) const;
  double operator()(double x) const;
  int sign_at(const Rational& x) const;

  UniPoly derivative() const;
  /// p(a + b x)
  UniPoly compose_affine(const Rational& a, const Rational& b) const;
  UniPoly monic() const;
  /// Integer coefficients with unit content and positive leading term.
  UniPoly primitive() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
inline UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
inline UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
inline UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
inline UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

/// Quotient and remainder of polynomial division; throws on zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), made primitive.
UniPoly squarefree_part(const UniPoly& p);

enum class Variable { eps, beta };

/// Polynomial in beta whose coefficients are polynomials in eps:
/// P(eps, beta) = sum_k coeff(k)(eps) * beta^k.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> beta_coeffs);
  static BiPoly from_eps(const UniPoly& p) { return BiPoly(std::vector<UniPoly>{p}); }
  static BiPoly beta() { return BiPoly(std::vector<UniPoly>{UniPoly(), UniPoly::constant(1)}); }

  int degree_beta() const { return static_cast<int>(c_.size()) - 1; }
  int degree_eps() const;
  int degree(Variable v) const { return v == Variable::beta ? degree_beta() : degree_eps(); }
  bool is_zero() const { return c_.empty(); }
  const UniPoly& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  /// Coefficient of eps^i beta^k.
  Rational coeff(int i, int k) const;
  const std::vector<UniPoly>& beta_coeffs() const { return c_; }

  Rational operator()(const Rational& eps, const Rational& beta) const;
  BigReal operator()(const BigReal& eps, const BigReal& beta) const;
  /// P(eps0, beta) as a polynomial in beta.
  UniPoly at_eps(const Rational& eps) const;
  /// P(eps, beta0) as a polynomial in eps.
  UniPoly at_beta(const Rational& beta) const;
  /// P(eps, a + b beta)
  BiPoly compose_beta_affine(const Rational& a, const Rational& b) const;
  /// Swaps the roles of eps and beta.
  BiPoly transposed() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const UniPoly& s);
  BiPoly operator-() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<UniPoly> c_;
};

inline BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
inline BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
inline BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
inline BiPoly operator*(BiPoly a, const UniPoly& s) { return a *= s; }

/// Determinant of a dense rational matrix (row-major, n x n) by exact
/// Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Resultant of p and q with respect to `eliminate`, as a polynomial in the
/// other variable. Built from the Sylvester determinant evaluated at
/// integer nodes and interpolated exactly.
UniPoly resultant(const BiPoly& p, const BiPoly& q, Variable eliminate);

/// Univariate resultant Res(p, q) via the Sylvester determinant.
Rational resultant(const UniPoly& p, const UniPoly& q);

}  // namespace qdot::numkit
