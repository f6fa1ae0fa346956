#include <doctest.h>

#include <random>

#include "halflog/series.hpp"
#include "support.hpp"

using namespace halflog;
using support::values;

namespace {

PowerSeries ints(long p, std::initializer_list<long> c, long cap = PowerSeries::kExactCap) {
  return PowerSeries::from_integers(p, c, cap);
}

PadicScalar q(long p, long num, long den = 1) {
  return PadicScalar::from_rational(p, mpq_class(num, den));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(phi(2, 1) == ints(2, {2, 1}));
  CHECK(phi(3, 1) == ints(3, {3, 3, 1}));
  CHECK(phi(2, 2) == ints(2, {2, 2, 1}));
  for (long p : {2L, 3L, 5L, 7L}) {
    for (long j = 1; j <= 6; ++j) {
      if (p == 7 && j > 4) continue;
      const PowerSeries f = phi(p, j);
      CHECK(f.coeff(0) == q(p, p));
      CHECK(f.coeffs().back() == q(p, 1));
      if (j <= 3) CHECK(values(f) == oracle::phi(p, j));
    }
  }
}

TEST_CASE("omega") {
  CHECK(omega(5, 0) == PowerSeries::monomial(5, 1));
  CHECK(omega(2, 1) == ints(2, {0, 2, 1}));
  CHECK(omega(3, 2) == mul(mul(PowerSeries::monomial(3, 1), phi(3, 1)), phi(3, 2)));
  for (long p : {2L, 3L}) {
    PowerSeries acc = PowerSeries::monomial(p, 1);
    for (long n = 1; n <= 5; ++n) {
      acc = mul(acc, phi(p, n));
      CHECK(acc == omega(p, n));
      CHECK(values(omega(p, n)) == oracle::omega(p, n));
    }
  }
}

TEST_CASE("congruent omega") {
  CHECK(omega_congruent(3, 0, 2, 0) == phi(3, 2));
  CHECK(omega_congruent(3, 3, 2, 1) == phi(3, 1));
  CHECK(omega_congruent(3, 0, 4, 0) == mul(phi(3, 2), phi(3, 4)));
}

TEST_CASE("truncated multiplication") {
  CHECK(mul(ints(3, {1, 1}), ints(3, {1, -1}), 10) == ints(3, {1, 0, -1}, 10));
  CHECK(mul(PowerSeries::monomial(3, 9), PowerSeries::monomial(3, 9), 10).is_zero());
  CHECK(mul(PowerSeries::monomial(3, 9), PowerSeries::monomial(3, 9), 10).cap() == 10);
}

TEST_CASE("multiplication matches the oracle on rationals") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  for (int t = 0; t < 50; ++t) {
    const long p = t % 2 ? 3 : 2;
    oracle::QPoly f(8), g(6);
    for (auto& c : f) c = mpq_class(num(rng), den(rng));
    for (auto& c : g) c = mpq_class(num(rng), den(rng));
    for (auto& c : f) c.canonicalize();
    for (auto& c : g) c.canonicalize();
    oracle::trim(f);
    oracle::trim(g);
    const PowerSeries h = mul(support::series(p, f), support::series(p, g));
    CHECK(values(h) == oracle::mul(f, g));
    const PowerSeries h5 = mul(support::series(p, f), support::series(p, g), 5);
    CHECK(values(h5) == support::truncate(oracle::mul(f, g), 5));
  }
}

TEST_CASE("precision in products") {
  // (1 + O(3^2)) * (3 + X) : constant known to 3^3, X term to 3^2
  const PowerSeries f({3, {PadicScalar::from_integer(3, 1, 2)}, 5});
  const PowerSeries g = ints(3, {3, 1});
  const PowerSeries h = mul(f, g, 5);
  CHECK(h.coeff(0).absprec() == 3);
  CHECK(h.coeff(1).absprec() == 2);
}

TEST_CASE("reduction and evaluation at roots") {
  CHECK(reduce_mod(omega(3, 2), phi(3, 1)).is_zero());
  CHECK(reduce_mod(PowerSeries::monomial(2, 1), phi(2, 1)) == ints(2, {-2}));
  CHECK(reduce_mod(phi(3, 2), phi(3, 1)) == ints(3, {3}));
  CHECK(eval_at_root(phi(3, 2), 1) == ints(3, {3}));
  CHECK(eval_at_root(omega(2, 2), 2).is_zero());
  CHECK(eval_at_root(phi(2, 3), 1) == ints(2, {2}));
  for (long p : {2L, 3L, 5L}) {
    for (long i = 2; i <= 4; ++i) {
      for (long j = 1; j < i; ++j) {
        if (p == 5 && i == 4) continue;
        CHECK(eval_at_root(phi(p, i), j) == ints(p, {p}));
      }
    }
  }
  CHECK(values(reduce_mod(phi(3, 3), phi(3, 2))) == oracle::rem(oracle::phi(3, 3), oracle::phi(3, 2)));
}

TEST_CASE("exact division") {
  CHECK(exact_divide(omega(3, 1), phi(3, 1)) == PowerSeries::monomial(3, 1));
  CHECK(exact_divide(omega(3, 2), phi(3, 2)) == omega(3, 1));
  try {
    (void)exact_divide(ints(2, {1, 1}), phi(2, 1));
    FAIL("expected InexactDivision");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InexactDivision);
  }
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-40, 40);
  for (int t = 0; t < 100; ++t) {
    const long p = 2 + t % 2;
    const PowerSeries g = t % 3 == 0 ? omega(p, 1 + t % 3) : phi(p, 1 + t % 3);
    std::vector<PadicScalar> c;
    for (int k = 0; k < 1 + t % 9; ++k) c.push_back(q(p, num(rng), 1 + (t % 4 == 0 ? p : 0)));
    const PowerSeries f(p, c);
    CHECK(exact_divide(mul(f, g), g) == f);
  }
}

TEST_CASE("divmod with inexact dividend") {
  const PowerSeries f({3, {PadicScalar::from_integer(3, 4, 5), q(3, 1), q(3, 1)}, PowerSeries::kExactCap});
  const DivMod d = divmod(f, phi(3, 1));
  CHECK(d.remainder.min_absprec() == 5);
}

TEST_CASE("Gauss norms") {
  for (long k : {0L, 1L, 5L}) {
    CHECK(*gauss_norm_log(PowerSeries::monomial(3, static_cast<std::size_t>(k)), mpq_class(1, 2)) ==
          mpq_class(-k) / 2);
  }
  const auto shifted = [](long p, long n) {
    return scalar_mul(PadicScalar::p_power(p, -1), phi(p, n)) - ints(p, {1});
  };
  CHECK(*gauss_norm_log(shifted(3, 1), mpq_class(1, 2)) == 0);
  CHECK(*gauss_norm_log(shifted(3, 2), mpq_class(1, 2)) == mpq_class(-3, 2));
  CHECK(!gauss_norm_log(PowerSeries(3), mpq_class(1)).has_value());
  for (long p : {2L, 3L}) {
    for (long n = 2; n < 6; ++n) {
      CHECK(*gauss_norm_log(shifted(p, n + 1), mpq_class(1, 2)) <
            *gauss_norm_log(shifted(p, n), mpq_class(1, 2)));
    }
  }
  // multiplicativity on polynomials
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(-20, 20);
  for (int t = 0; t < 30; ++t) {
    std::vector<PadicScalar> a, b;
    for (int k = 0; k < 6; ++k) a.push_back(q(3, num(rng), k % 2 ? 3 : 1));
    for (int k = 0; k < 4; ++k) b.push_back(q(3, num(rng) * 9 + 1));
    const PowerSeries f(3, a), g(3, b);
    if (f.is_zero()) continue;
    for (const mpq_class s : {mpq_class(1, 2), mpq_class(1, 3), mpq_class(2)}) {
      CHECK(*gauss_norm_log(mul(f, g), s) == *gauss_norm_log(f, s) + *gauss_norm_log(g, s));
      CHECK(*gauss_norm_log(f, s) == oracle::gauss_log(values(f), 3, s));
    }
  }
}

TEST_CASE("logarithm series") {
  const PowerSeries l = log_series(3, 12);
  CHECK(l.coeff(1) == q(3, 1));
  CHECK(l.coeff(3) == q(3, 1, 3));
  CHECK(l.coeff(3).valuation() == -1);
  CHECK(values(l) == oracle::log1p(12));
  std::vector<PadicScalar> geo;
  for (long k = 0; k < 11; ++k) geo.push_back(q(3, k % 2 ? -1 : 1));
  CHECK(l.derivative() == PowerSeries(3, geo, 11));
}

TEST_CASE("agreement") {
  const PowerSeries f = ints(3, {1, 2, 3}, 5);
  const PowerSeries g = ints(3, {1 + 81, 2, 3 - 27}, 5);
  CHECK(agree_mod(f, g, 3));
  CHECK(!agree_mod(f, g, 4));
  CHECK(agreement_valuation(f, g) == 3);
}

TEST_CASE("quadratic series") {
  const long p = 3, ap = 3;
  const QuadSeries x = QuadSeries::from_series(ap, ints(p, {1, 1}));
  const QuadExtScalar al = QuadExtScalar::alpha(p, ap);
  const QuadSeries y = scalar_mul(al, x);
  CHECK(y.coeff(1) == al);
  const QuadSeries yy = mul(y, y);
  // alpha^2 (1+X)^2
  CHECK(yy.coeff(2) == al * al);
  CHECK(eval_at_root(QuadSeries::from_series(ap, phi(3, 2)), 1) ==
        QuadSeries::from_series(ap, ints(3, {3})));
}

TEST_CASE("mixed primes rejected") {
  CHECK_THROWS_AS((void)(ints(3, {1}) + ints(5, {1})), Error);
  CHECK_THROWS_AS((void)PowerSeries(6), Error);
}
