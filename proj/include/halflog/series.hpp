#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "halflog/int_poly.hpp"
#include "halflog/padic.hpp"

namespace halflog {

/// Power series over Q_p known modulo X^cap.  A cap of kExactCap marks an
/// exact polynomial.  Trailing exact zeros are never stored.
class PowerSeries {
 public:
  static constexpr long kExactCap = kInfinity;

  explicit PowerSeries(long p, long cap = kExactCap);
  PowerSeries(long p, std::vector<PadicScalar> coeffs, long cap = kExactCap);

  static PowerSeries from_integers(long p, std::initializer_list<long> coeffs,
                                   long cap = kExactCap);
  static PowerSeries from_integers(long p, const std::vector<mpz_class>& coeffs,
                                   long cap = kExactCap);
  static PowerSeries constant(const PadicScalar& c, long cap = kExactCap);
  /// X^k
  static PowerSeries monomial(long p, std::size_t k, long cap = kExactCap);

  long prime() const { return p_; }
  long cap() const { return cap_; }
  bool is_polynomial() const { return cap_ == kExactCap; }

  /// Number of stored coefficients (degree + 1 of the stored part).
  std::size_t size() const { return coeffs_.size(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const PadicScalar> coeffs() const { return coeffs_; }
  /// Coefficient of X^k; an exact zero past the stored part.
  PadicScalar coeff(std::size_t k) const;

  bool is_zero() const;
  bool is_exact() const;
  long min_absprec() const;
  /// Smallest valuation bound over the stored coefficients (kInfinity for 0).
  long min_valuation() const;

  PowerSeries truncated(long cap) const;
  PowerSeries with_absprec(long prec) const;
  PowerSeries derivative() const;
  PowerSeries as_polynomial() const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
  friend bool operator==(const PowerSeries& f, const PowerSeries& g);

  std::string to_string() const;

 private:
  void normalize();

  long p_;
  long cap_;
  std::vector<PadicScalar> coeffs_;
};

PowerSeries scalar_mul(const PadicScalar& s, const PowerSeries& f);
PowerSeries scalar_mul(long s, const PowerSeries& f);
/// f*g known modulo X^min(cap, f.cap, g.cap).
PowerSeries mul(const PowerSeries& f, const PowerSeries& g, long cap = PowerSeries::kExactCap);

/// Phi_j(1+X) = sum_{t<p} (1+X)^(p^(j-1) t); coefficients are reduced to
/// absprec when one is given.
PowerSeries phi(long p, long j, long cap = PowerSeries::kExactCap, long absprec = kInfinity);
/// omega_n = (1+X)^(p^n) - 1.
PowerSeries omega(long p, long n, long cap = PowerSeries::kExactCap);
/// Product of Phi_j(1+X), 1 <= j <= n, j = i mod 2~.
PowerSeries omega_congruent(long p, long ap, long n, long i);

struct DivMod {
  PowerSeries quotient;
  PowerSeries remainder;
};

/// Division with remainder by a monic exact polynomial.  Only the stored
/// part of f takes part; a truncated f is treated as the polynomial it stores.
DivMod divmod(const PowerSeries& f, const PowerSeries& g);
PowerSeries reduce_mod(const PowerSeries& f, const PowerSeries& g);
/// f reduced modulo Phi_j(1+X): the value f(zeta_{p^j} - 1) in the basis
/// 1, X, ..., X^(deg Phi_j - 1).
PowerSeries eval_at_root(const PowerSeries& f, long j);
/// q with f = q*g; InexactDivision unless the remainder vanishes at the
/// available precision.
PowerSeries exact_divide(const PowerSeries& f, const PowerSeries& g);

/// log_p |f|_r at r = p^-s: max_k (-v(a_k) - k*s) over stored coefficients.
/// nullopt for the zero series.
std::optional<mpq_class> gauss_norm_log(const PowerSeries& f, const mpq_class& s);

/// log(1+X) = sum_{1<=k<cap} (-1)^(k+1) X^k / k with exact coefficients.
PowerSeries log_series(long p, long cap);

/// Coefficientwise agreement modulo p^prec below min(f.cap, g.cap).
bool agree_mod(const PowerSeries& f, const PowerSeries& g, long prec);

/// Minimum valuation bound of f - g below the common cap (kInfinity if equal).
long agreement_valuation(const PowerSeries& f, const PowerSeries& g);

/// Exact integral coefficients; NonIntegralCoefficient otherwise.
ipoly::IntPoly to_int_poly(const PowerSeries& f);
PowerSeries from_int_poly(long p, const ipoly::IntPoly& f, long cap = PowerSeries::kExactCap);

/// Series with coefficients in Q_p(alpha), stored as a + b*alpha with a, b
/// ordinary series.
class QuadSeries {
 public:
  QuadSeries(long ap, PowerSeries a, PowerSeries b);
  static QuadSeries from_series(long ap, const PowerSeries& a);

  long prime() const { return a_.prime(); }
  long ap() const { return ap_; }
  long cap() const { return std::min(a_.cap(), b_.cap()); }
  const PowerSeries& a() const { return a_; }
  const PowerSeries& b() const { return b_; }
  std::size_t size() const { return std::max(a_.size(), b_.size()); }
  QuadExtScalar coeff(std::size_t k) const;

  QuadSeries truncated(long cap) const;
  QuadSeries with_absprec(long prec) const;
  long min_absprec() const;

  QuadSeries operator-() const;
  friend QuadSeries operator+(const QuadSeries& f, const QuadSeries& g);
  friend QuadSeries operator-(const QuadSeries& f, const QuadSeries& g);
  friend bool operator==(const QuadSeries& f, const QuadSeries& g);

 private:
  long ap_;
  PowerSeries a_;
  PowerSeries b_;
};

QuadSeries scalar_mul(const QuadExtScalar& s, const QuadSeries& f);
QuadSeries mul(const QuadSeries& f, const PowerSeries& g, long cap = PowerSeries::kExactCap);
QuadSeries mul(const QuadSeries& f, const QuadSeries& g, long cap = PowerSeries::kExactCap);
QuadSeries eval_at_root(const QuadSeries& f, long j);
bool agree_mod(const QuadSeries& f, const QuadSeries& g, long prec);
/// log_p |f|_r with v(alpha) = 1/2, as in gauss_norm_log.
std::optional<mpq_class> gauss_norm_log(const QuadSeries& f, const mpq_class& s);

}  // namespace halflog
