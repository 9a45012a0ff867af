#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qdot/numkit/bigreal.hpp"
#include "qdot/numkit/poly.hpp"

namespace qdot::numkit {

struct BracketViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Interval (lo, hi] holding exactly one simple root of a squarefree
/// polynomial. lo == hi marks a root known exactly.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Sturm sequence of p (p, p', -rem, ...).
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Number of distinct real roots in (a, b] by Sturm's theorem.
int count_real_roots(const std::vector<UniPoly>& sturm, const Rational& a, const Rational& b);
int count_real_roots(const UniPoly& p, const Rational& a, const Rational& b);

/// Cauchy bound: every real root lies strictly inside (-B, B).
Rational root_bound(const UniPoly& p);

/// Disjoint isolating intervals for the distinct real roots of p, sorted
/// ascending. Works on the squarefree part of p. Throws
/// DegenerateInputError for the zero polynomial.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

/// Halves the interval until its width is at most `width`, keeping the
/// root inside. p must be squarefree with a sign change on the interval.
RootInterval narrow(const UniPoly& p, RootInterval iv, const Rational& width);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_rational(const Rational& lo, const Rational& hi);

/// The root isolated by `iv` when it is rational. Decides rigorously: the
/// interval is narrowed below 1/(2 L^2), L the leading coefficient of the
/// primitive form, which leaves at most one rational of denominator <= L.
std::optional<Rational> rational_root(const UniPoly& p, const RootInterval& iv);

/// Root of p inside `iv` to absolute accuracy `tol`, at tol's precision:
/// bisection down to a Newton-safe bracket, then safeguarded Newton.
/// Throws BracketViolationError when p does not change sign across iv.
BigReal refine_root(const UniPoly& p, const RootInterval& iv, const BigReal& tol);

}  // namespace qdot::numkit
