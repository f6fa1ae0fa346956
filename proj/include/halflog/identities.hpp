#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halflog/ladder.hpp"
#include "halflog/report.hpp"
#include "halflog/series.hpp"

namespace halflog {

struct SuiteConfig {
  std::vector<std::pair<long, long>> pairs;  // (p, a_p)
  long max_level = 3;                        // finite-level checks run for n <= max_level
  long cap = 40;                             // limit checks
  long prec = 8;
  long kernel_samples = 10;
  std::uint64_t seed = 1;
  bool include_limits = true;
  /// Restrict to these check names; empty runs everything.
  std::vector<std::string> only;
  LadderOptions ladder;  // swap_parity here is the fault injection switch
};

/// (2, +-2), (3, +-3), (3, 0), (5, 0).
SuiteConfig default_suite_config();
std::vector<std::string> suite_check_names();

/// Runs every selected check for every pair; reports come back sorted by
/// name, then by configuration.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

/// The delta table as printed for a_p in {2, -2, 3, -3, 0}, rows i = -2..7.
struct PrintedColumn {
  long p;
  long ap;
  std::vector<std::string> rows;
};
const std::vector<PrintedColumn>& printed_delta_table();

CheckReport delta_table_check(long p, long ap);
CheckReport coefficient_lemma_check(long p, long ap);
CheckReport matrix_identity_check(long p, long ap);
CheckReport y_beta_suite_check(long p, long ap);
CheckReport finite_determinant_check(long p, long ap, long n, long i, const LadderOptions& opts = {});
CheckReport coefficient_factorization_check(long p, long ap, long n, long j,
                                            const LadderOptions& opts = {});
CheckReport kernel_check(long p, long ap, long n, long samples, std::uint64_t seed);

enum class DeterminantForm {
  /// Theta^1 Upsilon^0 - Theta^0 Upsilon^1 = log_p(1+X)
  Literal,
  /// p^(N-n) X (Theta^1 Upsilon^0 - Theta^0 Upsilon^1) = log_p(1+X)
  Normalized,
};

CheckReport infinity_determinant_check(long p, long ap, long cap, long prec, DeterminantForm form,
                                       const LadderOptions& opts = {});
CheckReport infinity_row_recursion_check(long p, long ap, long i, long cap, long prec,
                                         const LadderOptions& opts = {});
/// |log^theta|_r - |log_p(1+X)|_r / 2 and the upsilon analogue at r = p^-1/2, p^-1/4.
CheckReport half_log_growth_check(long p, long ap, long cap, long prec,
                                  const LadderOptions& opts = {});

/// S = log^theta L^theta + log^upsilon L^upsilon against the finite-level
/// combination at the roots zeta_(p^j) - 1, 1 <= j <= j_max.
CheckReport factorization_check(long p, long ap, const PowerSeries& l_theta,
                                 const PowerSeries& l_upsilon, long cap, long prec, long j_max,
                                 const LadderOptions& opts = {});

}  // namespace halflog
