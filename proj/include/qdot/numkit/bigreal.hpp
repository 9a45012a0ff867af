#pragma once

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qdot/numkit/rational.hpp"

namespace qdot::numkit {

using Precision = mpfr_prec_t;

/// Precision (bits) used when a BigReal is built from a plain number.
/// Thread-local; see PrecisionScope.
Precision default_precision();
void set_default_precision(Precision bits);

/// Sets the thread's default precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(Precision bits) : saved_(default_precision()) {
    set_default_precision(bits);
  }
  ~PrecisionScope() { set_default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  Precision saved_;
};

/// Arbitrary-precision real backed by MPFR. Every value carries its own
/// precision; binary operations round to the larger operand precision.
class BigReal {
 public:
  BigReal() : BigReal(0L) {}
  BigReal(int v) : BigReal(static_cast<long>(v)) {}
  BigReal(long v, Precision bits = default_precision());
  BigReal(double v, Precision bits = default_precision());
  BigReal(const Rational& q, Precision bits);

  static BigReal zero(Precision bits) { return BigReal(0L, bits); }
  static BigReal from_string(std::string_view text, Precision bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  Precision precision() const { return mpfr_get_prec(v_); }
  /// Rounds the stored value to `bits`.
  void set_precision(Precision bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }
  BigReal with_precision(Precision bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exact conversion of the stored binary value.
  Rational to_rational() const;
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  /// Binary exponent e with 0.5 <= |x|/2^e < 1; very negative for zero.
  long exponent() const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator+=(long o);
  BigReal& operator-=(long o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);
  BigReal& operator+=(const Rational& o);
  BigReal& operator*=(const Rational& o);
  BigReal operator-() const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, double b);
  friend bool operator==(const BigReal& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }

 private:
  mpfr_t v_;
};

inline BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
inline BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
inline BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
inline BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
inline BigReal operator+(BigReal a, long b) { return a += b; }
inline BigReal operator-(BigReal a, long b) { return a -= b; }
inline BigReal operator*(BigReal a, long b) { return a *= b; }
inline BigReal operator/(BigReal a, long b) { return a /= b; }
inline BigReal operator+(long a, BigReal b) { return b += a; }
inline BigReal operator-(long a, const BigReal& b) { return -b + a; }
inline BigReal operator*(long a, BigReal b) { return b *= a; }
BigReal operator/(long a, const BigReal& b);
inline BigReal operator+(BigReal a, int b) { return a += static_cast<long>(b); }
inline BigReal operator-(BigReal a, int b) { return a -= static_cast<long>(b); }
inline BigReal operator*(BigReal a, int b) { return a *= static_cast<long>(b); }
inline BigReal operator/(BigReal a, int b) { return a /= static_cast<long>(b); }
inline BigReal operator+(int a, BigReal b) { return b += static_cast<long>(a); }
inline BigReal operator-(int a, const BigReal& b) { return static_cast<long>(a) - b; }
inline BigReal operator*(int a, BigReal b) { return b *= static_cast<long>(a); }
inline BigReal operator/(int a, const BigReal& b) { return static_cast<long>(a) / b; }
inline BigReal operator*(BigReal a, const Rational& b) { return a *= b; }
inline BigReal operator+(BigReal a, const Rational& b) { return a += b; }

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal pow(const BigReal& x, long n);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal gamma(const BigReal& x);
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);
BigReal pi(Precision bits);

std::ostream& operator<<(std::ostream& os, const BigReal& x);

/// Bits needed for `digits` decimal digits.
inline Precision bits_for_digits(double digits) {
  return static_cast<Precision>(digits * 3.3219280948873623 + 1.0);
}

}  // namespace qdot::numkit
