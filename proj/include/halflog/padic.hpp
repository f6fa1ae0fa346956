#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>

#include "halflog/error.hpp"

namespace halflog {

/// Sentinel for "exact" precision and for the valuation of an exact zero.
inline constexpr long kInfinity = std::numeric_limits<long>::max();

/// a + b, saturating at kInfinity.
long sat_add(long a, long b);

/// Greatest integer not greater than a / b (b > 0).
long floor_div(long a, long b);

bool is_prime(long n);

/// p^e as a big integer (e >= 0).
mpz_class pow_p(long p, unsigned long e);

/// v_p(z) for z != 0; strips the p-part from z in place.
long strip_p(mpz_class& z, long p);

/// An element of Q_p represented as unit * p^val.
///
/// Exact values are arbitrary rationals; the unit is then a rational with
/// numerator and denominator prime to p.  Values with finite absprec are known
/// modulo p^absprec; their unit is the integer residue in [1, p^(absprec-val)).
/// Anything with val >= absprec collapses to the zero-at-precision, which is
/// the only representation of a value indistinguishable from 0.
class PadicScalar {
 public:
  static PadicScalar zero(long p, long absprec = kInfinity);
  static PadicScalar from_integer(long p, const mpz_class& n, long absprec = kInfinity);
  static PadicScalar from_integer(long p, long n, long absprec = kInfinity) {
    return from_integer(p, mpz_class(n), absprec);
  }
  static PadicScalar from_rational(long p, const mpq_class& q, long absprec = kInfinity);
  /// Exact p^e for any integer e.
  static PadicScalar p_power(long p, long e);

  long prime() const { return p_; }
  long absprec() const { return absprec_; }
  bool is_exact() const { return absprec_ == kInfinity; }
  /// Exact zero or zero-at-precision.
  bool is_zero() const { return unit_ == 0; }
  bool is_exact_zero() const { return is_zero() && is_exact(); }

  /// v_p of the value; kInfinity for an exact zero.
  /// Throws PrecisionExhausted for a zero-at-precision.
  long valuation() const;
  /// Lower bound on v_p: the valuation, or absprec for a zero-at-precision.
  long valuation_bound() const { return is_zero() ? absprec_ : val_; }

  const mpq_class& unit() const { return unit_; }
  long unit_exponent() const { return val_; }

  /// The rational value of the stored representative.
  mpq_class value() const;

  /// Serialized form num / (den_unit * p^den_pow); den_unit is 1 unless the
  /// value is an exact rational with denominator prime to p.
  mpz_class numerator() const;
  long den_pow() const;
  mpz_class den_unit() const;

  /// Lowers absprec to min(absprec, prec), re-reducing the representative.
  PadicScalar with_absprec(long prec) const;

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator-(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator*(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator/(const PadicScalar& x, const PadicScalar& y);
  PadicScalar& operator+=(const PadicScalar& y) { return *this = *this + y; }
  PadicScalar& operator-=(const PadicScalar& y) { return *this = *this - y; }
  PadicScalar& operator*=(const PadicScalar& y) { return *this = *this * y; }

  /// Identical representation (same value and same precision).
  friend bool operator==(const PadicScalar& x, const PadicScalar& y);

  std::string to_string() const;

  /// Canonical constructor: value unit * p^exponent known modulo p^absprec.
  static PadicScalar make(long p, mpq_class unit, long exponent, long absprec);

 private:
  PadicScalar(long p, long absprec) : p_(p), absprec_(absprec) {}

  long p_ = 2;
  mpq_class unit_ = 0;
  long val_ = 0;
  long absprec_ = kInfinity;
};

/// num / p^den_pow known modulo p^absprec.
PadicScalar padic_from_rational(long p, const mpz_class& num, long den_pow,
                                long absprec = kInfinity);

/// True when both operands are known to at least p^prec and their
/// difference has valuation >= prec.
bool agree_mod(const PadicScalar& x, const PadicScalar& y, long prec);

/// Element a + b*alpha of Z_p[alpha] with alpha^2 = a_p*alpha - p.
class QuadExtScalar {
 public:
  QuadExtScalar(long p, long ap, PadicScalar a, PadicScalar b);

  static QuadExtScalar zero(long p, long ap);
  static QuadExtScalar one(long p, long ap);
  static QuadExtScalar alpha(long p, long ap);
  /// The other root a_p - alpha = p / alpha.
  static QuadExtScalar alpha_bar(long p, long ap);
  static QuadExtScalar from_scalar(long ap, const PadicScalar& a);

  long prime() const { return p_; }
  long ap() const { return ap_; }
  const PadicScalar& a() const { return a_; }
  const PadicScalar& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExtScalar conj() const;
  PadicScalar norm() const;
  PadicScalar trace() const;
  QuadExtScalar inverse() const;
  /// x^e for any integer e; negative exponents go through inverse().
  QuadExtScalar pow(long e) const;
  QuadExtScalar with_absprec(long prec) const;

  /// Twice the valuation, using v(alpha) = 1/2 (valid whenever p | a_p).
  long valuation_half_bound() const;

  QuadExtScalar operator-() const;
  friend QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator*(const PadicScalar& s, const QuadExtScalar& x);
  friend QuadExtScalar operator/(const QuadExtScalar& x, const QuadExtScalar& y);
  friend bool operator==(const QuadExtScalar& x, const QuadExtScalar& y);

  std::string to_string() const;

 private:
  long p_;
  long ap_;
  PadicScalar a_;
  PadicScalar b_;
};

bool agree_mod(const QuadExtScalar& x, const QuadExtScalar& y, long prec);

}  // namespace halflog
