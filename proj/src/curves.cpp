#include "halflog/curves.hpp"

#include <string>

#include "halflog/error.hpp"
#include "halflog/padic.hpp"

namespace halflog {

mpz_class discriminant(const CurveData& c) {
  const mpz_class a1 = c.a1, a2 = c.a2, a3 = c.a3, a4 = c.a4, a6 = c.a6;
  const mpz_class b2 = a1 * a1 + 4 * a2;
  const mpz_class b4 = 2 * a4 + a1 * a3;
  const mpz_class b6 = a3 * a3 + 4 * a6;
  const mpz_class b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

long count_points(const CurveData& c, long p) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (discriminant(c) % p == 0) {
    fail(ErrorCode::BadReduction, "p = " + std::to_string(p) + " divides the discriminant");
  }
  auto md = [p](long v) { return ((v % p) + p) % p; };
  const long a1 = md(c.a1), a2 = md(c.a2), a3 = md(c.a3), a4 = md(c.a4), a6 = md(c.a6);
  long count = 1;  // point at infinity
  for (long x = 0; x < p; ++x) {
    const long rhs = md(md(md(x * x) * x) + md(a2 * md(x * x)) + md(a4 * x) + a6);
    for (long y = 0; y < p; ++y) {
      const long lhs = md(md(y * y) + md(a1 * md(x * y)) + md(a3 * y));
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

long ap(const CurveData& c, long p) {
  const long a = p + 1 - count_points(c, p);
  if (a * a > 4 * p) {
    fail(ErrorCode::HasseViolation, "a_p = " + std::to_string(a) + " at p = " + std::to_string(p));
  }
  return a;
}

bool is_supersingular(const CurveData& c, long p) { return ap(c, p) % p == 0; }

}  // namespace halflog
