#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "halflog/padic.hpp"
#include "halflog/report.hpp"

namespace halflog {

/// Periods of the trace ladder: 2~, 4~ and 1~.
struct PeriodConstants {
  long two_tilde;
  long four_tilde;
  long one_tilde;
};

/// p prime, p | a_p and a_p^2 <= 4p.
bool is_supersingular_pair(long p, long ap);
/// Throws NotSupersingular unless is_supersingular_pair(p, ap).
void require_supersingular(long p, long ap);

/// Also checks C^(2~) = -p^(1~) I.
PeriodConstants period_constants(long p, long ap);

/// a_p(i): a_p/p for odd i, a_p for even i.  Always an integer for a
/// supersingular pair.
long ap_at(long p, long ap, long i);

/// Exact 2x2 rational matrix.
struct Mat2 {
  mpq_class a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Mat2 inverse() const;
  Mat2 pow(long e) const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) = default;
  std::string to_string() const;
};

/// C = [[a_p, -1], [p, 0]].
Mat2 hecke_matrix(long p, long ap);

/// delta^i = y c_n + y' c_(n-1).
struct DeltaCoeffs {
  long p;
  long ap;
  long i;
  mpz_class y;
  mpz_class y_prime;
};

DeltaCoeffs delta_coeffs(long p, long ap, long i);

struct DeltaRow {
  long i;
  mpz_class y;
  mpz_class y_prime;
  std::string rendered;
};

/// "y c_n +- y' c_(n-1)" in ASCII, unit coefficients omitted.
std::string render_delta(const mpz_class& y, const mpz_class& y_prime);
std::vector<DeltaRow> delta_table(long p, long ap, long i_min, long i_max);

/// A_l with its inverse identity checked (IdentityViolation otherwise).
Mat2 a_matrix(long p, long ap, long l);

/// beta_m = p^[m/2] y_m alpha^(-m) in Z[alpha] coordinates.
QuadExtScalar beta(long p, long ap, long m);

/// p^[i/2] y_i - p^[(i-k)/2] y_(i-k) (p/alpha)^k = beta_(k-1) alpha^i, exactly.
CheckReport y_beta_identity_check(long p, long ap, long i, long k);

}  // namespace halflog
