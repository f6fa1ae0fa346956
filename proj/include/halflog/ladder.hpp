#pragma once

#include <optional>

#include "halflog/report.hpp"
#include "halflog/series.hpp"

namespace halflog {

/// One row (Theta^k, Upsilon^k) of a ladder.
struct LadderRow {
  PowerSeries theta;
  PowerSeries upsilon;
};

/// Rows (Theta^i, Upsilon^i) and (Theta^(i-1), Upsilon^(i-1)) at a finite
/// level or at infinity.
struct LadderMatrix {
  long p;
  long ap;
  std::optional<long> level;  // empty at infinity
  long index;
  long cap;
  long prec;  // kInfinity at finite level
  LadderRow upper;
  LadderRow lower;
  /// Level at which the limit iteration stopped (infinity only).
  long stop_level = 0;

  bool at_infinity() const { return !level.has_value(); }
};

struct LadderOptions {
  /// Overrides the NotConverged iteration cap on n.
  std::optional<long> max_level;
  /// Fault injection: use a_p/p at even indices and a_p at odd ones.
  bool swap_parity = false;
};

/// Level-n ladder at index i, entries truncated at X^cap.
LadderMatrix ladder(long p, long ap, long n, long i, long cap = PowerSeries::kExactCap,
                    const LadderOptions& opts = {});

/// Level-n ladder at index i with every entry reduced modulo the monic
/// integral polynomial `modulus`; factors are reduced as they are multiplied.
LadderMatrix ladder_mod(long p, long ap, long n, long i, const PowerSeries& modulus,
                        const LadderOptions& opts = {});

/// The scaled limits Theta_inf^i, Upsilon_inf^i (and the i-1 row) modulo X^cap,
/// to absolute precision prec.
LadderMatrix ladder_infinity(long p, long ap, long i, long cap, long prec,
                             const LadderOptions& opts = {});

/// Default hard cap on the level reached by ladder_infinity.
long default_max_level(long p, long cap, long prec);

/// N = n+1 for odd p, n+2 for p = 2.
long level_shift(long p, long n);

/// kappa_(-N) Theta_n^0 - kappa_(-N-1) Theta_n^(-1) = p^[(-N-i)/2] Theta_n^(-N-i) abar^i
/// and the Upsilon analogue, exactly.
CheckReport kappa_identity_check(long p, long ap, long n, long i);

/// Theta^i Upsilon^(i-1) - Upsilon^i Theta^(i-1), modulo X^m.cap.
PowerSeries ladder_det(const LadderMatrix& m);

}  // namespace halflog
