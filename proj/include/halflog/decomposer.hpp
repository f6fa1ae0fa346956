#pragma once

#include <array>
#include <string>

#include "halflog/report.hpp"
#include "halflog/series.hpp"

namespace halflog {

/// Element of Lambda_n = Q_p[X]/(omega_n) held as its canonical remainder.
class LambdaElement {
 public:
  LambdaElement(long p, long level, const PowerSeries& f);
  static LambdaElement zero(long p, long level);

  long prime() const { return poly_.prime(); }
  long level() const { return level_; }
  const PowerSeries& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  friend LambdaElement operator+(const LambdaElement& x, const LambdaElement& y);
  friend LambdaElement operator-(const LambdaElement& x, const LambdaElement& y);
  friend LambdaElement operator*(const LambdaElement& x, const LambdaElement& y);
  friend LambdaElement operator*(long c, const LambdaElement& x);
  friend bool operator==(const LambdaElement& x, const LambdaElement& y);

 private:
  long level_;
  PowerSeries poly_;
};

struct LambdaPair {
  LambdaElement first;
  LambdaElement second;

  bool is_zero() const { return first.is_zero() && second.is_zero(); }
  friend bool operator==(const LambdaPair& x, const LambdaPair& y) = default;
};

LambdaPair operator-(const LambdaPair& x, const LambdaPair& y);

struct KernelBasis {
  std::array<LambdaPair, 2> generators;
};

/// (Theta^i a + Upsilon^i b, Theta^(i-1) a + Upsilon^(i-1) b) in Lambda_n.
LambdaPair phi_apply(long p, long ap, long n, long i, const LambdaPair& v);

/// X (Upsilon^i, -Theta^i) and X (Upsilon^(i-1), -Theta^(i-1)).
KernelBasis kernel_basis(long p, long ap, long n, long i);

bool kernel_member(long p, long ap, long n, const LambdaPair& v);

/// (theta, upsilon) with phi_apply(i = 1) equal to (P1, P0).  Throws
/// InexactDivision when the input is outside the image.
LambdaPair decompose(long p, long ap, long n, const LambdaElement& p1, const LambdaElement& p0);

/// Describes the kernel ambiguity of decompose at level n.
std::string kernel_coset_note(long p, long ap, long n);

/// Both kernel generators at level 2m+nu, index 2m+1, reduced modulo
/// omega_nu, have every coefficient divisible by p^m.
CheckReport limit_lemma_check(long p, long ap, long m, long nu);

}  // namespace halflog
