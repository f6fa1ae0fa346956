#include <doctest.h>

#include <random>

#include "halflog/padic.hpp"
#include "oracles.hpp"

using namespace halflog;

namespace {

PadicScalar q(long p, long num, long den = 1) { return PadicScalar::from_rational(p, mpq_class(num, den)); }

template <typename F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("from rational") {
  const PadicScalar a = padic_from_rational(3, 1, 0, 5);
  CHECK(a.absprec() == 5);
  CHECK(a.valuation() == 0);
  CHECK(agree_mod(a, q(3, 1), 5));

  const PadicScalar b = padic_from_rational(3, 1, 1, 5);
  CHECK(b.valuation() == -1);
  CHECK(b.value() == mpq_class(1, 3));

  const PadicScalar c = padic_from_rational(2, 6, 0, kInfinity);
  CHECK(c.is_exact());
  CHECK(c.valuation() == 1);
  CHECK(c.value() == 6);
}

TEST_CASE("arithmetic") {
  CHECK(q(3, 1, 3) * q(3, 3) == q(3, 1));
  const PadicScalar s = padic_from_rational(3, 1, 0, 2) + q(3, 9);
  CHECK(s.absprec() == 2);
  CHECK(agree_mod(s, q(3, 1), 2));
  const PadicScalar d = q(2, 6) / q(2, 2);
  CHECK(d == q(2, 3));
  CHECK(d.valuation() == 0);
  CHECK((q(5, 7) - q(5, 7)).is_exact_zero());
}

TEST_CASE("valuation") {
  CHECK(q(2, 6).valuation() == 1);
  CHECK(q(3, 1, 3).valuation() == -1);
  CHECK(PadicScalar::zero(7).valuation() == kInfinity);
  expect_code(ErrorCode::PrecisionExhausted, [] { (void)PadicScalar::zero(3, 4).valuation(); });
}

TEST_CASE("precision propagates conservatively") {
  const PadicScalar a = padic_from_rational(3, 2, 0, 4);  // 2 + O(3^4)
  const PadicScalar b = padic_from_rational(3, 9, 0, 6);  // 9 + O(3^6)
  CHECK((a * b).absprec() == 6);                          // min(4 + 2, 6 + 0)
  CHECK((a + b).absprec() == 4);
  CHECK((a / q(3, 3)).absprec() == 3);
}

TEST_CASE("errors") {
  expect_code(ErrorCode::DivisionByZero, [] { (void)(q(3, 1) / PadicScalar::zero(3)); });
  expect_code(ErrorCode::PrecisionExhausted, [] { (void)(q(3, 1) / PadicScalar::zero(3, 5)); });
  expect_code(ErrorCode::MixedPrime, [] { (void)(q(3, 1) + q(5, 1)); });
  expect_code(ErrorCode::NonPrimeModulus, [] { (void)q(4, 1); });
}

TEST_CASE("ring axioms on random exact scalars") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 60);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int t = 0; t < 100; ++t) {
      const PadicScalar x = q(p, num(rng), den(rng));
      const PadicScalar y = q(p, num(rng), den(rng));
      const PadicScalar z = q(p, num(rng), den(rng));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) - y == x);
      CHECK((x * y).value() == x.value() * y.value());
      if (!x.is_zero()) {
        CHECK((x * x).valuation() == 2 * x.valuation());
        CHECK(x.valuation() == oracle::vp(x.value(), p));
      }
    }
  }
}

TEST_CASE("quadratic extension") {
  const auto two = [](long p, long ap) { return QuadExtScalar::alpha(p, ap); };
  const QuadExtScalar a22 = two(2, 2);
  CHECK(a22 * a22 == QuadExtScalar(2, 2, q(2, -2), q(2, 2)));
  CHECK(a22 * a22.conj() == QuadExtScalar::from_scalar(2, q(2, 2)));
  CHECK(a22.conj() == QuadExtScalar(2, 2, q(2, 2), q(2, -1)));
  CHECK(QuadExtScalar::one(3, 3).conj() == QuadExtScalar::one(3, 3));

  const QuadExtScalar a3m = two(3, -3);
  CHECK(a3m * a3m.conj() == QuadExtScalar::from_scalar(-3, q(3, 3)));
  CHECK(two(3, 3).conj() * two(3, 3) == QuadExtScalar::from_scalar(3, q(3, 3)));

  const long pairs[][2] = {{2, 2}, {2, -2}, {2, 0}, {3, 3}, {3, -3}, {3, 0}, {5, 0}, {7, 0}};
  for (const auto& pr : pairs) {
    const long p = pr[0], ap = pr[1];
    const QuadExtScalar al = QuadExtScalar::alpha(p, ap);
    const QuadExtScalar ab = QuadExtScalar::alpha_bar(p, ap);
    CHECK(al + ab == QuadExtScalar::from_scalar(ap, q(p, ap)));
    CHECK(al * ab == QuadExtScalar::from_scalar(ap, q(p, p)));
    CHECK(al.norm() == q(p, p));
    CHECK(al.trace() == q(p, ap));
    CHECK(al * al.inverse() == QuadExtScalar::one(p, ap));
    CHECK(al.pow(-3) * al.pow(3) == QuadExtScalar::one(p, ap));
  }
  CHECK_THROWS_AS((void)(two(3, 3) + two(3, -3)), Error);
}

TEST_CASE("conjugation is a multiplicative involution") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-50, 50);
  for (int t = 0; t < 100; ++t) {
    const long p = t % 2 ? 3 : 2;
    const long ap = t % 3 == 0 ? 0 : p;
    const QuadExtScalar x(p, ap, q(p, num(rng), 1 + t % 4), q(p, num(rng)));
    const QuadExtScalar y(p, ap, q(p, num(rng)), q(p, num(rng), 1 + t % 3));
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
  }
}

TEST_CASE("half valuation of alpha") {
  CHECK(QuadExtScalar::alpha(3, 3).valuation_half_bound() == 1);
  CHECK(QuadExtScalar::alpha(3, 0).pow(2).valuation_half_bound() == 2);
  CHECK(QuadExtScalar::from_scalar(0, q(5, 25)).valuation_half_bound() == 4);
}
