#include "qdot/numkit/roots.hpp"

#include <algorithm>

namespace qdot::numkit {

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg = sign_of(s(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

Integer floor_of(const Rational& q) {
  Integer n = numerator_of(q);
  Integer d = denominator_of(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

// A split point strictly inside (lo, hi) where p does not vanish.
Rational split_point(const UniPoly& p, const Rational& lo, const Rational& hi) {
  for (long den = 2;; ++den) {
    for (long num = den / 2; num >= 1; --num) {
      for (long k : {num, den - num}) {
        Rational s = lo + (hi - lo) * Rational(k, den);
        if (p.sign_at(s) != 0) return s;
      }
    }
  }
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UniPoly d = p.derivative();
  while (!d.is_zero()) {
    seq.push_back(d * Rational(1 / abs(d.leading())));
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    d = -r;
  }
  return seq;
}

int count_real_roots(const std::vector<UniPoly>& sturm, const Rational& a, const Rational& b) {
  return variations(sturm, a) - variations(sturm, b);
}

int count_real_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  return count_real_roots(sturm_sequence(squarefree_part(p)), a, b);
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max<Rational>(m, Rational(abs(Rational(p[i] / p.leading()))));
  return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw DegenerateInputError("root isolation of the zero polynomial");
  std::vector<RootInterval> out;
  UniPoly q = squarefree_part(p);
  if (q.degree() < 1) return out;
  auto seq = sturm_sequence(q);
  Rational b = root_bound(q);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-b, b, count_real_roots(seq, -b, b)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    Rational s = split_point(q, cur.lo, cur.hi);
    int left = count_real_roots(seq, cur.lo, s);
    // Right half pushed first so the left half is processed first.
    stack.push_back({s, cur.hi, cur.count - left});
    stack.push_back({cur.lo, s, left});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return out;
}

RootInterval narrow(const UniPoly& p, RootInterval iv, const Rational& width) {
  if (iv.is_exact()) return iv;
  int slo = p.sign_at(iv.lo);
  int shi = p.sign_at(iv.hi);
  if (shi == 0) return {iv.hi, iv.hi};
  if (slo == 0 || slo == shi) throw BracketViolationError("interval does not bracket a sign change");
  while (iv.width() > width) {
    Rational mid = iv.midpoint();
    int sm = p.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

Rational simplest_rational(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_rational(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_rational(-hi, -lo);
  Integer fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational frac_lo = lo - Rational(fl);
  Rational frac_hi = hi - Rational(fl);
  Rational inner = simplest_rational(Rational(1 / frac_hi), Rational(1 / frac_lo));
  return Rational(fl) + Rational(1 / inner);
}

std::optional<Rational> rational_root(const UniPoly& p, const RootInterval& iv) {
  if (iv.is_exact()) return iv.lo;
  UniPoly q = squarefree_part(p);
  Integer lead = numerator_of(q.leading());
  Rational width(Integer(1), Integer(2 * lead * lead));
  RootInterval small = narrow(q, iv, width);
  if (small.is_exact()) return small.lo;
  Rational s = simplest_rational(small.lo, small.hi);
  if (q(s) == 0) return s;
  return std::nullopt;
}

BigReal refine_root(const UniPoly& p, const RootInterval& iv, const BigReal& tol) {
  const Precision bits = tol.precision();
  if (iv.is_exact()) return BigReal(iv.lo, bits);
  UniPoly q = squarefree_part(p);
  int slo = q.sign_at(iv.lo);
  int shi = q.sign_at(iv.hi);
  if (shi == 0) return BigReal(iv.hi, bits);
  if (slo == 0 || slo == shi) throw BracketViolationError("interval does not bracket a sign change");

  UniPoly dq = q.derivative();
  BigReal lo(iv.lo, bits), hi(iv.hi, bits);
  BigReal x = (lo + hi) / 2L;
  for (int iter = 0; iter < 100000; ++iter) {
    BigReal fx = q(x);
    if (fx.is_zero()) return x;
    if (fx.sign() == slo) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo < tol) return (lo + hi) / 2L;
    BigReal dfx = dq(x);
    BigReal next = dfx.is_zero() ? (lo + hi) / 2L : x - fx / dfx;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2L;
    BigReal step = abs(next - x);
    x = std::move(next);
    if (step < ldexp(tol, -2)) return x;
  }
  return x;
}

}  // namespace qdot::numkit
