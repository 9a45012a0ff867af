#include "qdot/numkit/exact_real.hpp"

#include <sstream>

namespace qdot::numkit {

namespace {

constexpr Precision kProbeBits = 320;

// Largest f with f^2 | n; returns (f, n / f^2).
std::pair<Integer, Integer> split_square(Integer n) {
  Integer f = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      f *= p;
    }
  }
  return {f, n};
}

Rational near_rational(const BigReal& x) {
  BigReal slack = ldexp(BigReal(1L, x.precision()), -static_cast<long>(x.precision()) + 64);
  slack *= max(BigReal(1L, x.precision()), abs(x));
  return simplest_rational((x - slack).to_rational(), (x + slack).to_rational());
}

// Monic quadratic t^2 - s t + p dividing q with one root in `iv`, if any.
std::optional<UniPoly> quadratic_factor(const UniPoly& q, const RootInterval& iv) {
  if (q.degree() < 2) return std::nullopt;
  if (q.degree() == 2) return q;
  BigReal tol = ldexp(BigReal(1L, kProbeBits), -static_cast<long>(kProbeBits) + 8);
  BigReal x = refine_root(q, iv, tol);
  for (const auto& other : isolate_real_roots(q)) {
    if (other.lo == iv.lo && other.hi == iv.hi) continue;
    BigReal y = refine_root(q, other, tol);
    Rational s = near_rational(x + y);
    Rational p = near_rational(x * y);
    UniPoly m{p, -s, Rational(1)};
    if (divmod(q, m).second.is_zero()) return m.primitive();
  }
  return std::nullopt;
}

}  // namespace

ExactReal::ExactReal(const Rational& q) : root_rational_(q) {}

ExactReal ExactReal::algebraic(const UniPoly& p, const RootInterval& iv) {
  UniPoly q = squarefree_part(p);
  if (auto r = rational_root(q, iv)) return ExactReal(*r);
  ExactReal out;
  out.poly_ = quadratic_factor(q, iv).value_or(q);
  out.interval_ = iv;
  return out;
}

ExactReal ExactReal::affine(const Rational& scale, const Rational& offset) const {
  ExactReal out(*this);
  if (is_rational()) {
    out.root_rational_ = root_rational_ * scale + offset;
    return out;
  }
  out.scale_ = scale_ * scale;
  out.offset_ = offset_ * scale + offset;
  return out;
}

Rational ExactReal::rational() const {
  if (!is_rational()) throw std::logic_error("ExactReal is irrational");
  return root_rational_;
}

BigReal ExactReal::value(Precision bits) const {
  if (is_rational()) return BigReal(root_rational_, bits);
  BigReal tol = ldexp(BigReal(1L, bits + 32), -static_cast<long>(bits) - 8);
  BigReal r = refine_root(*poly_, interval_, tol);
  r *= scale_;
  r += offset_;
  r.set_precision(bits);
  return r;
}

UniPoly ExactReal::defining_polynomial() const {
  if (is_rational()) return UniPoly{Rational(-root_rational_), Rational(1)};
  // Root of poly(t) at t = (x - offset)/scale.
  return poly_->compose_affine(Rational(-offset_ / scale_), Rational(1 / scale_)).primitive();
}

int ExactReal::compare(const Rational& q) const {
  if (is_rational()) return root_rational_ < q ? -1 : (root_rational_ > q ? 1 : 0);
  Rational t = (q - offset_) / scale_;
  int flip = scale_ < 0 ? -1 : 1;
  RootInterval iv = interval_;
  while (t > iv.lo && t < iv.hi) iv = narrow(*poly_, iv, iv.width() / 2);
  int root_vs_t = t <= iv.lo ? 1 : -1;
  return root_vs_t * flip;
}

std::optional<std::string> ExactReal::closed_form() const {
  if (is_rational()) return to_string(root_rational_);
  if (poly_->degree() != 2) return std::nullopt;
  UniPoly m = poly_->primitive();
  Rational a2 = m[2], b1 = m[1], c0 = m[0];
  Rational vertex = -b1 / (2 * a2);
  RootInterval iv = interval_;
  while (vertex > iv.lo && vertex < iv.hi) iv = narrow(m, iv, iv.width() / 2);
  int branch = iv.lo >= vertex ? 1 : -1;

  Integer disc = numerator_of(Rational(b1 * b1 - 4 * a2 * c0));
  auto [f, c] = split_square(disc);
  Rational a = (scale_ * (-b1) + offset_ * 2 * a2) / (2 * a2);
  Rational b = Rational(branch) * scale_ * Rational(f) / (2 * a2);
  Integer d = boost::multiprecision::lcm(denominator_of(a), denominator_of(b));
  Integer an = numerator_of(Rational(a * d));
  Integer bn = numerator_of(Rational(b * d));

  std::ostringstream os;
  bool wrap = d != 1;
  if (wrap) os << "(";
  if (an != 0) os << an;
  if (bn < 0) {
    os << "-";
  } else if (an != 0) {
    os << "+";
  }
  Integer bmag = bn < 0 ? Integer(-bn) : bn;
  if (bmag != 1) os << bmag << "*";
  os << "sqrt(" << c << ")";
  if (wrap) os << ")/" << d;
  return os.str();
}

std::string ExactReal::str(int digits) const {
  if (auto cf = closed_form()) return *cf;
  return value(bits_for_digits(digits + 10)).to_string(digits);
}

}  // namespace qdot::numkit
