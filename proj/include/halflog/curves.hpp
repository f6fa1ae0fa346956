#pragma once

#include <gmpxx.h>

namespace halflog {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct CurveData {
  long a1 = 0;
  long a2 = 0;
  long a3 = 0;
  long a4 = 0;
  long a6 = 0;
};

mpz_class discriminant(const CurveData& c);

/// #E(F_p) by enumeration; BadReduction when p divides the discriminant.
long count_points(const CurveData& c, long p);

/// p + 1 - #E(F_p), checked against the Hasse bound.
long ap(const CurveData& c, long p);

bool is_supersingular(const CurveData& c, long p);

}  // namespace halflog
