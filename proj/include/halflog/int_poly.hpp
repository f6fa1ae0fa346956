#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <vector>

// Dense integer polynomials, low degree first.  Finite-level ladder entries
// are integral, so the hot loops run here instead of on PadicScalar.
namespace halflog::ipoly {

using IntPoly = std::vector<mpz_class>;

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

void trim(IntPoly& f);
/// a*f + b*g
IntPoly lincomb(const mpz_class& a, const IntPoly& f, const mpz_class& b, const IntPoly& g);
IntPoly scale(const IntPoly& f, const mpz_class& c);
/// f*g modulo X^cap.
IntPoly mul(const IntPoly& f, const IntPoly& g, std::size_t cap = kNoCap);
/// Coefficients reduced into [0, mod).
void reduce_coeffs(IntPoly& f, const mpz_class& mod);
/// Drops coefficients of X^k for k >= cap.
void truncate(IntPoly& f, std::size_t cap);

/// Remainder of f modulo a monic g; the quotient is written when requested.
IntPoly rem(const IntPoly& f, const IntPoly& g, IntPoly* quotient = nullptr);

/// Phi_j(1+X) modulo X^cap.
IntPoly phi(long p, long j, std::size_t cap = kNoCap);
/// (1+X)^(p^n) - 1 modulo X^cap.
IntPoly omega(long p, long n, std::size_t cap = kNoCap);

}  // namespace halflog::ipoly
