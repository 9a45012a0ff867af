#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdot/frobenius.hpp"

namespace series {

using namespace qdot;
using namespace qdot::fm;

constexpr Precision kBits = 256;

BigReal big(double v) { return BigReal(v, kBits); }
BigReal big(const Rational& q) { return BigReal(q, kBits); }

TEST_CASE("raw_series first coefficients") {
  auto s0 = raw_series(big(0.3), big(1.25), big(0.1), 0, 8);
  REQUIRE(s0.b.size() == 9);
  CHECK(s0.b[0] == 1.0);
  CHECK(s0.b[1].to_double() == doctest::Approx(1.25 / 2).epsilon(1e-15));
  auto s1 = raw_series(big(0.3), big(1.25), big(0.1), 1, 8);
  CHECK(s1.b[1].to_double() == doctest::Approx(1.25 / 6).epsilon(1e-15));

  // Expansion of exp(-eta^4/32)(1 + eta^2/2): eta^4 coefficient -1/32.
  auto g = raw_series(big(Rational(7, 8)), big(1.0), big(Rational(1, 8)), 0, 12);
  CHECK(g.b[2].to_double() == doctest::Approx(-1.0 / 32).epsilon(1e-15));
  CHECK(g.db_deps[2].to_double() == doctest::Approx(-1.0 / 12).epsilon(1e-15));
  CHECK(g.db_dbeta[1].to_double() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g.db_deps[0].is_zero());
}

TEST_CASE("derivative series match central differences") {
  const double h = 1e-20;
  auto s = raw_series(big(0.6), big(1.3), big(0.0625), 0, 40);
  auto se = raw_series(big(0.6) + big(h), big(1.3), big(0.0625), 0, 40);
  auto sb = raw_series(big(0.6), big(1.3) + big(h), big(0.0625), 0, 40);
  for (int i : {3, 10, 25, 40}) {
    const double fe = ((se.b[i] - s.b[i]) / big(h)).to_double();
    const double fb = ((sb.b[i] - s.b[i]) / big(h)).to_double();
    CHECK(fe == doctest::Approx(s.db_deps[i].to_double()).epsilon(1e-12));
    CHECK(fb == doctest::Approx(s.db_dbeta[i].to_double()).epsilon(1e-12));
  }
}

TEST_CASE("delta -> -delta swaps the boundary functions") {
  auto p = boundary_values(big(0.7), big(0.4), big(0.0625), 0, big(5.0), 80);
  auto m = boundary_values(big(0.7), big(-0.4), big(0.0625), 0, big(5.0), 80);
  CHECK(p.F1 == m.F2);
  CHECK(p.F2 == m.F1);
}

TEST_CASE("g(R, 1) changes sign across the exact level at wx = 1/8") {
  const BigReal w = big(Rational(1, 8));
  for (double R : {5.0, 5.5}) {
    auto lo = boundary_values(big(0.775), big(0.0), w, 0, big(R), 100);
    auto hi = boundary_values(big(0.975), big(0.0), w, 0, big(R), 100);
    CHECK(lo.F1.sign() * hi.F1.sign() < 0);
  }
}

TEST_CASE("exact zero at the end of the ladder") {
  const BigReal w = big(Rational(1, 16));
  auto bv = boundary_values(big(Rational(11, 16)), big(1.0), w, 0, big(6.0), 140);
  auto off = boundary_values(big(Rational(11, 16)) + big(1e-3), big(1.0), w, 0, big(6.0), 140);
  // The free solution is only exponentially small at the wall, not zero.
  CHECK((abs(bv.F1) / bv.scale1).to_double() < 1e-15);
  CHECK((abs(bv.F2) / bv.scale2).to_double() < 1e-15);
  CHECK((abs(bv.F1) / abs(off.F1)).to_double() < 1e-9);
  CHECK((abs(bv.F2) / abs(off.F2)).to_double() < 1e-9);
}

TEST_CASE("precision guard") {
  // 64 bits cannot carry a K = 140 series at R = 6.
  BigReal w(Rational(1, 16), 64);
  CHECK_THROWS_AS(boundary_values(BigReal(0.6875, 64), BigReal(1.0, 64), w, 0, BigReal(6.0, 64), 140),
                  InsufficientPrecisionError);
  CHECK(working_precision(60, 5.0, 10) >= 512);
  CHECK(working_precision(200, 8.0, 10) > working_precision(100, 8.0, 10));
}

TEST_CASE("delta = 0 roots") {
  auto r = solve_delta0(big(Rational(1, 8)), 0, 5.0, 140, {big(0.1), big(1.2)}, 1, 20);
  // K = 140 resolves the series at R = 5; the wall itself shifts by ~1e-15.
  CHECK(std::abs(r.energy.to_double() - 0.875) < 5e-9);
  CHECK(r.energy > 0.875);
  CHECK(r.node_counts == std::pair{0, 0});
  r = solve_delta0(big(Rational(1, 24)), 1, 6.0, 140, {big(0.05), big(0.6)}, 1, 20);
  CHECK(std::abs(r.energy.to_double() - 0.375) < 5e-9);
  CHECK(r.energy > 0.375);
  CHECK(r.node_counts == std::pair{1, 1});
  r = solve_delta0(big(1.0), 0, 3.0, 120, {big(1.0), big(5.5)}, 1, 20);
  CHECK(std::abs(r.energy.to_double() - 4.77335161) < 5e-9);
  CHECK_THROWS_AS(solve_delta0(big(Rational(1, 8)), 0, 5.0, 140, {big(0.1), big(0.5)}, 1, 20), NotFoundError);
}

TEST_CASE("Table 2 rungs") {
  struct Row {
    int K;
    double R;
    const char* eps;
    const char* delta;
  };
  const Row rows[] = {{60, 5, "0.6874432520", "0.999811134"},  {70, 5, "0.6875024844", "1.000007959"},
                      {90, 5.5, "0.6875000837", "1.000000296"}, {100, 5.5, "0.6875000006", "1.000000002"},
                      {120, 5.5, "0.6875000008", "1.000000003"}, {140, 6, "0.6875000000", "1.000000000"}};
  const ExactReal w(Rational(1, 16));
  const FmState pair{0, 2, 0};
  std::optional<std::pair<BigReal, BigReal>> seed;
  for (const auto& row : rows) {
    CAPTURE(row.K);
    auto r = solve_rung(w, pair, row.K, row.R, 14, seed);
    seed = std::pair{r.energy, r.delta};
    const double de = std::abs(r.energy.to_double() - std::stod(row.eps));
    const double dd = std::abs(r.delta.to_double() - std::stod(row.delta));
    CHECK(de <= 1.0e-10);
    CHECK(dd <= 1.0e-9);
  }
}

TEST_CASE("solve_pair from a coarse seed, and its mirror") {
  const BigReal w = big(Rational(1, 16));
  auto r = solve_pair(w, 0, 6.0, 140, {big(0.7), big(0.9)}, 14);
  CHECK(std::abs(r.energy.to_double() - 0.6875) <= 1e-10);
  CHECK(std::abs(r.delta.to_double() - 1.0) <= 1e-9);
  auto m = solve_pair(w, 0, 6.0, 140, {big(0.7), big(-0.9)}, 14);
  CHECK(agreeing_digits(r.energy, m.energy) >= 14);
  CHECK(agreeing_digits(r.delta, -m.delta) >= 14);
}

TEST_CASE("scan_seeds") {
  const BigReal w = big(Rational(1, 16));
  auto seeds = scan_seeds(w, 0, 5.0, 80, {0.3, 1.0}, {0.0, 1.5}, 40);
  bool near = false;
  for (const auto& s : seeds) near = near || (std::abs(s.eps - 0.6875) < 0.05 && std::abs(s.delta - 1.0) < 0.05);
  CHECK(near);
  CHECK(scan_seeds(w, 0, 5.0, 80, {0.3, 1.0}, {1.2, 1.5}, 20).empty());

  auto mirrored = scan_seeds(w, 0, 5.0, 80, {0.3, 1.0}, {-1.5, 0.0}, 40);
  REQUIRE(mirrored.size() == seeds.size());
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    bool found = false;
    for (const auto& m : mirrored)
      found = found || (std::abs(m.eps - seeds[k].eps) < 1e-12 && std::abs(m.delta + seeds[k].delta) < 1e-12);
    CHECK(found);
  }
}

TEST_CASE("walls raise the energy toward the free limit") {
  const ExactReal w(Rational(1, 8));
  const FmState ground{0, 0, 0};
  double previous = 1e9;
  for (double R : {3.0, 3.5, 4.0, 4.5, 5.0}) {
    auto r = solve_rung(w, ground, 140, R, 16);
    const double e = r.energy.to_double();
    CHECK(e < previous);
    CHECK(e > 0.875 - 1e-13);
    previous = e;
  }
}

TEST_CASE("state selectors") {
  CHECK(parse_state("ground-s", 0).n1 == 0);
  auto t = parse_state("ground-t", 1);
  CHECK((t.n1 == 1 && t.n2 == 1 && t.nu == 1));
  auto p = parse_state("pair-even", 0);
  CHECK((p.n1 == 0 && p.n2 == 2 && !p.delta_zero()));
  auto k = parse_state("delta0-2", 0);
  CHECK((k.n1 == 2 && k.n2 == 2));
  auto e = parse_state("1,3", 1);
  CHECK((e.n1 == 1 && e.n2 == 3));
  CHECK_THROWS(parse_state("1,2", 0));
  CHECK_THROWS(parse_state("nonsense", 0));
}

TEST_CASE("agreeing_digits") {
  CHECK(agreeing_digits(big(0.6875), big(0.6875)) >= 15);
  CHECK(agreeing_digits(big(0.6874432520), big(0.6875024844)) == 4);  // relative 8.6e-5
  CHECK(agreeing_digits(big(1.0), big(2.0)) == 0);
}

}  // namespace series

namespace ladder {

using namespace qdot;
using namespace qdot::fm;

TEST_CASE("ladder converges and survives precision doubling") {
  struct Case {
    Rational w;
    FmState state;
    double expected;
  };
  const Case cases[] = {{Rational(1, 64), {0, 0, 0}, 0.171875},
                        {Rational(2), {1, 1, 1}, 11.317113654},
                        {Rational(1, 16), {0, 2, 0}, 0.6875}};
  for (const auto& c : cases) {
    CAPTURE(c.state.str());
    auto conv = converge(ExactReal(c.w), c.state, 9);
    CHECK(conv.doubled_precision_agrees);
    CHECK(conv.result.energy.to_double() == doctest::Approx(c.expected).epsilon(5e-9));
    CHECK(conv.result.converged_digits >= 9);
    REQUIRE(conv.trace.size() >= 3);
    // Digits agreeing with the final value, counted up to the target, never
    // drop after the third rung (one plateau allowed).
    int drops = 0;
    int last = -1;
    for (std::size_t k = 3; k < conv.trace.size(); ++k) {
      const int d = std::min(9, agreeing_digits(conv.trace[k].energy, conv.result.energy));
      if (d < last) ++drops;
      last = d;
    }
    CHECK(drops <= 1);
  }
}

}  // namespace ladder
