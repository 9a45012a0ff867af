#include "qdot/numkit/bigreal.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace qdot::numkit {

namespace {
thread_local Precision tls_default_precision = 512;

Precision wider(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

Precision default_precision() { return tls_default_precision; }
void set_default_precision(Precision bits) { tls_default_precision = bits; }

BigReal::BigReal(long v, Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(double v, Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const Rational& q, Precision bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.backend().data(), MPFR_RNDN);
}

BigReal BigReal::from_string(std::string_view text, Precision bits) {
  BigReal r = zero(bits);
  std::string s(text);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: " + s);
  }
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::with_precision(Precision bits) const {
  BigReal r = zero(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

Rational BigReal::to_rational() const {
  if (!is_finite()) throw std::domain_error("non-finite BigReal has no rational value");
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.backend().data(), v_);
  Rational q(m);
  if (e >= 0) {
    q *= Rational(Integer(1) << static_cast<unsigned>(e));
  } else {
    q /= Rational(Integer(1) << static_cast<unsigned>(-e));
  }
  return q;
}

std::string BigReal::to_string(int digits) const {
  int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

std::string BigReal::to_fixed(int decimals) const {
  int n = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, v_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, v_);
  return std::string(buf.data());
}

long BigReal::exponent() const {
  if (is_zero()) return mpfr_get_emin();
  return mpfr_get_exp(v_);
}

BigReal& BigReal::operator+=(const BigReal& o) {
  mpfr_prec_round(v_, wider(*this, o), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  mpfr_prec_round(v_, wider(*this, o), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  mpfr_prec_round(v_, wider(*this, o), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  mpfr_prec_round(v_, wider(*this, o), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(const Rational& o) {
  mpfr_add_q(v_, v_, o.backend().data(), MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const Rational& o) {
  mpfr_mul_q(v_, v_, o.backend().data(), MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, double b) {
  if (mpfr_nan_p(a.v_) || b != b) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r = BigReal::zero(b.precision());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& x) {
  BigReal r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r = BigReal::zero(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r = BigReal::zero(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  BigReal r = BigReal::zero(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r = BigReal::zero(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r = BigReal::zero(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal gamma(const BigReal& x) {
  BigReal r = BigReal::zero(x.precision());
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r(x);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal pi(Precision bits) {
  BigReal r = BigReal::zero(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  auto digits = os.precision() > 0 ? static_cast<int>(os.precision()) : 17;
  return os << x.to_string(digits);
}

}  // namespace qdot::numkit
