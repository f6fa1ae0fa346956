#include <doctest.h>

#include "halflog/ladder.hpp"
#include "halflog/trace_ladder.hpp"
#include "support.hpp"

using namespace halflog;
using support::values;

namespace {

const long kPairs[][2] = {{2, 2}, {2, -2}, {3, 3}, {3, -3}, {3, 0}, {5, 0}};

PowerSeries ints(long p, std::initializer_list<long> c) { return PowerSeries::from_integers(p, c); }

void check_against_oracle(const LadderMatrix& m, const oracle::Ladder& o, long cap) {
  CHECK(values(m.upper.theta) == support::truncate(o[0][0], cap));
  CHECK(values(m.upper.upsilon) == support::truncate(o[0][1], cap));
  CHECK(values(m.lower.theta) == support::truncate(o[1][0], cap));
  CHECK(values(m.lower.upsilon) == support::truncate(o[1][1], cap));
}

}  // namespace

TEST_CASE("single factor ladders") {
  const LadderMatrix m = ladder(3, 3, 1, 1);
  CHECK(m.upper.theta == ints(3, {3}));
  CHECK(m.upper.upsilon == -phi(3, 1));
  CHECK(m.lower.theta == ints(3, {1}));
  CHECK(m.lower.upsilon.is_zero());

  const LadderMatrix d = ladder(3, 3, 1, 0);
  CHECK(d.upper.theta == ints(3, {1}));
  CHECK(d.upper.upsilon.is_zero());
  CHECK(d.lower.theta.is_zero());
  CHECK(d.lower.upsilon == phi(3, 1));
  CHECK(mul(PowerSeries::monomial(3, 1), ladder_det(d)) == omega(3, 1));

  const LadderMatrix e = ladder(2, -2, 2, 1);
  CHECK(mul(PowerSeries::monomial(2, 1), ladder_det(e)) == omega(2, 2));
}

TEST_CASE("ladders match the defining product") {
  for (const auto& pr : kPairs) {
    const long p = pr[0], ap = pr[1];
    for (long n = 0; n <= (p == 5 ? 2 : 3); ++n) {
      for (long i = -6; i <= 8; ++i) {
        const oracle::Ladder o = oracle::ladder(p, ap, n, i);
        check_against_oracle(ladder(p, ap, n, i), o, kInfinity);
        check_against_oracle(ladder(p, ap, n, i, 7), o, 7);
      }
    }
  }
}

TEST_CASE("reduced ladders") {
  for (const auto& pr : kPairs) {
    const long p = pr[0], ap = pr[1];
    const PowerSeries w = omega(p, 1);
    const oracle::QPoly wo = oracle::omega(p, 1);
    for (long n = 1; n <= 3; ++n) {
      for (long i : {-3L, 0L, 1L, 4L}) {
        const LadderMatrix m = ladder_mod(p, ap, n, i, w);
        const oracle::Ladder o = oracle::ladder(p, ap, n, i);
        CHECK(values(m.upper.theta) == oracle::rem(o[0][0], wo));
        CHECK(values(m.upper.upsilon) == oracle::rem(o[0][1], wo));
        CHECK(values(m.lower.theta) == oracle::rem(o[1][0], wo));
        CHECK(values(m.lower.upsilon) == oracle::rem(o[1][1], wo));
      }
    }
  }
}

TEST_CASE("level shift") {
  CHECK(level_shift(3, 4) == 5);
  CHECK(level_shift(2, 4) == 6);
}

TEST_CASE("limits agree with scaled finite ladders") {
  const long cap = 15, prec = 6;
  for (const auto& pr : kPairs) {
    const long p = pr[0], ap = pr[1];
    for (long i : {-1L, 0L, 1L, 2L}) {
      const LadderMatrix inf = ladder_infinity(p, ap, i, cap, prec);
      CHECK(inf.at_infinity());
      CHECK(inf.upper.theta.min_absprec() >= prec);
      // one level beyond the stopping point is still within precision
      const long n = inf.stop_level + 1;
      const long big_n = level_shift(p, n);
      const LadderMatrix fin = ladder(p, ap, n, i - big_n, cap);
      const PadicScalar su = PadicScalar::p_power(p, floor_div(i - big_n, 2));
      const PadicScalar sl = PadicScalar::p_power(p, floor_div(i - big_n - 1, 2));
      CHECK(agree_mod(inf.upper.theta, scalar_mul(su, fin.upper.theta), prec));
      CHECK(agree_mod(inf.upper.upsilon, scalar_mul(su, fin.upper.upsilon), prec));
      CHECK(agree_mod(inf.lower.theta, scalar_mul(sl, fin.lower.theta), prec));
      CHECK(agree_mod(inf.lower.upsilon, scalar_mul(sl, fin.lower.upsilon), prec));
    }
  }
}

TEST_CASE("rows at infinity follow [[a_p, -p], [1, 0]]") {
  for (const auto& pr : kPairs) {
    const long p = pr[0], ap = pr[1];
    const LadderMatrix a = ladder_infinity(p, ap, 0, 20, 8);
    const LadderMatrix b = ladder_infinity(p, ap, 1, 20, 8);
    CHECK(agree_mod(b.upper.theta, scalar_mul(ap, a.upper.theta) - scalar_mul(p, a.lower.theta), 8));
    CHECK(agree_mod(b.upper.upsilon, scalar_mul(ap, a.upper.upsilon) - scalar_mul(p, a.lower.upsilon), 8));
    CHECK(agree_mod(b.lower.theta, a.upper.theta, 8));
  }
}

TEST_CASE("determinant at infinity carries X p^(N-n)") {
  for (const auto& pr : kPairs) {
    const long p = pr[0], ap = pr[1];
    const long cap = 20, prec = 8;
    const LadderMatrix m = ladder_infinity(p, ap, 1, cap, prec + 4);
    const PowerSeries det = ladder_det(m);
    const PowerSeries lhs =
        scalar_mul(PadicScalar::p_power(p, p == 2 ? 2 : 1), mul(PowerSeries::monomial(p, 1), det, cap));
    CHECK(agree_mod(lhs, log_series(p, cap), prec));
    // the constant term is 1/(p p^(N-n)), not 0
    CHECK(det.coeff(0).valuation() == (p == 2 ? -2 : -1));
  }
}

TEST_CASE("iteration cap") {
  LadderOptions opts;
  opts.max_level = 2;
  try {
    (void)ladder_infinity(3, 3, 0, 30, 12, opts);
    FAIL("expected NotConverged");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConverged);
  }
}

TEST_CASE("parity fault injection changes the ladder") {
  LadderOptions bad;
  bad.swap_parity = true;
  const LadderMatrix good = ladder(3, 3, 2, 3);
  const LadderMatrix wrong = ladder(3, 3, 2, 3, PowerSeries::kExactCap, bad);
  CHECK(!(good.upper.theta == wrong.upper.theta && good.upper.upsilon == wrong.upper.upsilon));
}

TEST_CASE("kappa identity") {
  CHECK(kappa_identity_check(3, 3, 1, 1).passed);
  CHECK(kappa_identity_check(2, 2, 2, 3).passed);
  CHECK(kappa_identity_check(3, 0, 2, 1).passed);
  for (const auto& pr : kPairs)
    for (long n = 1; n <= 2; ++n)
      for (long i = -2; i <= 4; ++i) CHECK(kappa_identity_check(pr[0], pr[1], n, i).passed);
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS((void)ladder(3, 1, 1, 1), Error);
  CHECK_THROWS_AS((void)ladder(3, 3, -1, 1), Error);
  CHECK_THROWS_AS((void)ladder_infinity(3, 3, 0, 0, 5), Error);
}
