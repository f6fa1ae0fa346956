#pragma once

#include <string>

#include "halflog/ladder.hpp"
#include "halflog/report.hpp"
#include "halflog/series.hpp"

namespace halflog {

/// (log^theta, log^upsilon) for the symbolic root alpha of X^2 - a_p X + p.
struct HalfLogPair {
  long p;
  long ap;
  std::string root_tag = "alpha";
  QuadSeries log_theta;
  QuadSeries log_upsilon;
  long cap;
  long prec;
};

/// Theta_inf^0 - abar Theta_inf^(-1) and the Upsilon analogue.
HalfLogPair half_logs(long p, long ap, long cap, long prec, const LadderOptions& opts = {});

/// The pair rebuilt from limits at indices -i and -j:
/// (Theta_inf^(-i) abar^i - Theta_inf^(-j) abar^j) / (beta_(j-1) - beta_(i-1)).
/// Precision is raised internally so the result holds to p^prec.
HalfLogPair half_logs_from_indices(long p, long ap, long i, long j, long cap, long prec,
                                   const LadderOptions& opts = {});

CheckReport intrinsicness_check(long p, long ap, long i, long j, long cap, long prec,
                                const LadderOptions& opts = {});

enum class Parity { Even, Odd };

/// prod_{j = parity, j >= 1} Phi_j(1+X)/p modulo X^cap, known to p^prec.
/// Only defined for odd p.
PowerSeries pollack_product(long p, Parity parity, long cap, long prec);

/// Result of comparing the a_p = 0 half-logs with the parity products.
struct PollackNormalization {
  /// log^theta = c_theta * prod_even, log^upsilon = c_upsilon * alpha * prod_odd.
  PadicScalar c_theta;
  PadicScalar c_upsilon;
  CheckReport report;
};

PollackNormalization pollack_comparison(long p, long cap, long prec, const LadderOptions& opts = {});

}  // namespace halflog
