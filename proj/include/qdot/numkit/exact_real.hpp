#pragma once

#include <optional>
#include <string>

#include "qdot/numkit/bigreal.hpp"
#include "qdot/numkit/poly.hpp"
#include "qdot/numkit/roots.hpp"

namespace qdot::numkit {

/// A real number known exactly: scale * r + offset, where r is either a
/// rational or the unique root of a rational polynomial in an isolating
/// interval. Quadratic defining polynomials additionally give a closed form
/// (a + b*sqrt(c))/d.
class ExactReal {
 public:
  ExactReal() : ExactReal(Rational(0)) {}
  ExactReal(const Rational& q);
  ExactReal(long v) : ExactReal(Rational(v)) {}
  ExactReal(int v) : ExactReal(Rational(v)) {}

  /// Root of p in iv. The defining polynomial is reduced to a linear or
  /// quadratic factor of p whenever one exists.
  static ExactReal algebraic(const UniPoly& p, const RootInterval& iv);

  /// scale * this + offset
  ExactReal affine(const Rational& scale, const Rational& offset) const;

  bool is_rational() const { return !poly_.has_value(); }
  /// Requires is_rational().
  Rational rational() const;

  BigReal value(Precision bits) const;
  double to_double() const { return value(128).to_double(); }

  /// "p/q" for rationals, "(a+b*sqrt(c))/d" for quadratic irrationals,
  /// nothing otherwise.
  std::optional<std::string> closed_form() const;
  /// closed_form() when available, else `digits` significant digits.
  std::string str(int digits = 20) const;

  /// Defining polynomial of the underlying root (linear for rationals).
  UniPoly defining_polynomial() const;

  /// Exact comparison with a rational, decided from the isolating interval.
  int compare(const Rational& q) const;

 private:
  Rational root_rational_;             // when poly_ is empty
  std::optional<UniPoly> poly_;        // squarefree, primitive
  RootInterval interval_;
  Rational scale_ = 1;
  Rational offset_ = 0;
};

}  // namespace qdot::numkit
