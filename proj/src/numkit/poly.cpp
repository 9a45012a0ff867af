#include "qdot/numkit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qdot::numkit {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigReal UniPoly::operator()(const BigReal& x) const {
  BigReal acc = BigReal::zero(x.precision());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double UniPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

int UniPoly::sign_at(const Rational& x) const {
  Rational v = (*this)(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
  UniPoly inner{a, b};
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& q : c_) l = boost::multiprecision::lcm(l, denominator_of(q));
  std::vector<Rational> v;
  Integer g = 0;
  for (const auto& q : c_) {
    Rational s = q * l;
    g = boost::multiprecision::gcd(g, numerator_of(s));
    v.push_back(s);
  }
  if (leading() < 0) g = -g;
  for (auto& q : v) q /= g;
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  for (auto& q : c_) q *= s;
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& q = c_[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    Rational mag = abs(q);
    os << (q < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = mag == 1 && i > 0;
    if (!unit) os << numkit::to_string(mag);
    if (i > 0) os << (unit ? "" : "*") << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DegenerateInputError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {UniPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1);
  Rational inv = 1 / b.leading();
  for (int k = dq; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + db)] * inv;
    quot[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive();
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw DegenerateInputError("squarefree part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(1);
  UniPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.primitive();
}

// ----------------------------------------------------------------- BiPoly

BiPoly::BiPoly(std::vector<UniPoly> beta_coeffs) : c_(std::move(beta_coeffs)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::degree_eps() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

Rational BiPoly::coeff(int i, int k) const {
  if (k < 0 || k > degree_beta()) return 0;
  return c_[static_cast<std::size_t>(k)].coeff(i);
}

Rational BiPoly::operator()(const Rational& eps, const Rational& beta) const {
  return at_eps(eps)(beta);
}

BigReal BiPoly::operator()(const BigReal& eps, const BigReal& beta) const {
  Precision bits = std::max(eps.precision(), beta.precision());
  BigReal acc = BigReal::zero(bits);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= beta;
    acc += (*it)(eps);
  }
  return acc;
}

UniPoly BiPoly::at_eps(const Rational& eps) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& p : c_) v.push_back(p(eps));
  return UniPoly(std::move(v));
}

UniPoly BiPoly::at_beta(const Rational& beta) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= beta;
    acc += *it;
  }
  return acc;
}

BiPoly BiPoly::compose_beta_affine(const Rational& a, const Rational& b) const {
  BiPoly inner(std::vector<UniPoly>{UniPoly::constant(a), UniPoly::constant(b)});
  BiPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += from_eps(*it);
  }
  return acc;
}

BiPoly BiPoly::transposed() const {
  int de = degree_eps();
  std::vector<UniPoly> out;
  for (int i = 0; i <= de; ++i) {
    std::vector<Rational> v;
    for (int k = 0; k <= degree_beta(); ++k) v.push_back(coeff(i, k));
    out.emplace_back(std::move(v));
  }
  return BiPoly(std::move(out));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<UniPoly> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const UniPoly& s) {
  for (auto& p : c_) p *= s;
  trim();
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& p : r.c_) p = -p;
  return r;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree_beta(); k >= 0; --k) {
    const UniPoly& p = c_[static_cast<std::size_t>(k)];
    if (p.is_zero()) continue;
    os << (first ? "" : " + ") << "(" << p.to_string("eps") << ")";
    if (k > 0) os << "*beta";
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------- resultants

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = 1 / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

namespace {

// Sylvester determinant with nominal degrees: coefficient vectors may carry
// zero leading entries, which is what specialization of a generic
// resultant requires.
Rational sylvester_det(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const int m = static_cast<int>(p.size()) - 1;
  const int n = static_cast<int>(q.size()) - 1;
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = p[static_cast<std::size_t>(m - j)];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = q[static_cast<std::size_t>(n - j)];
  }
  return determinant(std::move(s));
}

std::vector<Rational> padded(const UniPoly& p, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i <= p.degree(); ++i) v[static_cast<std::size_t>(i)] = p[i];
  return v;
}

// Newton divided-difference interpolation at the nodes x_i = i.
UniPoly interpolate_at_integers(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
    }
  }
  UniPoly acc;
  for (std::size_t k = n; k-- > 0;) {
    acc *= UniPoly{Rational(-static_cast<long>(k)), Rational(1)};
    acc += UniPoly::constant(dd[k]);
  }
  return acc;
}

}  // namespace

Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw DegenerateInputError("resultant of a zero polynomial");
  return sylvester_det(p.coeffs(), q.coeffs());
}

UniPoly resultant(const BiPoly& p, const BiPoly& q, Variable eliminate) {
  if (p.is_zero() || q.is_zero()) throw DegenerateInputError("resultant of a zero polynomial");
  if (eliminate == Variable::eps) return resultant(p.transposed(), q.transposed(), Variable::beta);
  const int m = p.degree_beta();
  const int n = q.degree_beta();
  const int bound = n * std::max(p.degree_eps(), 0) + m * std::max(q.degree_eps(), 0);
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(bound) + 1);
  for (int node = 0; node <= bound; ++node) {
    Rational e(node);
    values.push_back(sylvester_det(padded(p.at_eps(e), m), padded(q.at_eps(e), n)));
  }
  return interpolate_at_integers(values);
}

}  // namespace qdot::numkit
