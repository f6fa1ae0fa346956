#include "halflog/half_log.hpp"

#include "halflog/trace_ladder.hpp"

namespace halflog {

namespace {

constexpr int kGuardAttempts = 8;

QuadSeries lift(long ap, const PowerSeries& f) { return QuadSeries::from_series(ap, f); }

// First coefficient index where f and g disagree modulo p^prec.
long first_mismatch(const PowerSeries& f, const PowerSeries& g, long prec) {
  const std::size_t len = std::max(f.size(), g.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (!agree_mod(f.coeff(k), g.coeff(k), prec)) return static_cast<long>(k);
  }
  return -1;
}

nlohmann::json mismatch_witness(const std::string& what, const PowerSeries& f, const PowerSeries& g,
                                long prec) {
  const long k = first_mismatch(f, g, prec);
  if (k < 0) return {{"entry", what}};
  const auto uk = static_cast<std::size_t>(k);
  return {{"entry", what},
          {"coefficient", k},
          {"lhs", f.coeff(uk).to_string()},
          {"rhs", g.coeff(uk).to_string()}};
}

}  // namespace

HalfLogPair half_logs(long p, long ap, long cap, long prec, const LadderOptions& opts) {
  const LadderMatrix m = ladder_infinity(p, ap, 0, cap, prec, opts);
  const QuadExtScalar abar = QuadExtScalar::alpha_bar(p, ap);
  QuadSeries lt = lift(ap, m.upper.theta) - scalar_mul(abar, lift(ap, m.lower.theta));
  QuadSeries lu = lift(ap, m.upper.upsilon) - scalar_mul(abar, lift(ap, m.lower.upsilon));
  return {p, ap, "alpha", std::move(lt), std::move(lu), cap, prec};
}

HalfLogPair half_logs_from_indices(long p, long ap, long i, long j, long cap, long prec,
                                   const LadderOptions& opts) {
  const PeriodConstants pc = period_constants(p, ap);
  if (((i - j) % pc.two_tilde) == 0) {
    fail(ErrorCode::InvalidArgument, "indices must differ modulo " + std::to_string(pc.two_tilde));
  }
  const QuadExtScalar abar = QuadExtScalar::alpha_bar(p, ap);
  const QuadExtScalar denom_inv = (beta(p, ap, j - 1) - beta(p, ap, i - 1)).inverse();
  const QuadExtScalar ai = abar.pow(i);
  const QuadExtScalar aj = abar.pow(j);
  long guard = 0;
  for (int attempt = 0; attempt < kGuardAttempts; ++attempt) {
    const long work = prec + guard;
    const LadderMatrix mi = ladder_infinity(p, ap, -i, cap, work, opts);
    const LadderMatrix mj = ladder_infinity(p, ap, -j, cap, work, opts);
    auto combine = [&](const PowerSeries& fi, const PowerSeries& fj) {
      return scalar_mul(denom_inv, scalar_mul(ai, lift(ap, fi)) - scalar_mul(aj, lift(ap, fj)));
    };
    QuadSeries lt = combine(mi.upper.theta, mj.upper.theta);
    QuadSeries lu = combine(mi.upper.upsilon, mj.upper.upsilon);
    const long got = std::min(lt.min_absprec(), lu.min_absprec());
    if (got >= prec) {
      return {p, ap, "alpha", lt.with_absprec(prec), lu.with_absprec(prec), cap, prec};
    }
    guard += prec - got;
  }
  fail(ErrorCode::NotConverged, "could not reach precision " + std::to_string(prec));
}

CheckReport intrinsicness_check(long p, long ap, long i, long j, long cap, long prec,
                                const LadderOptions& opts) {
  const nlohmann::json config = {{"p", p}, {"ap", ap}, {"i", i}, {"j", j}, {"cap", cap}, {"prec", prec}};
  const HalfLogPair base = half_logs(p, ap, cap, prec, opts);
  const HalfLogPair other = half_logs_from_indices(p, ap, i, j, cap, prec, opts);
  const std::pair<const QuadSeries*, const QuadSeries*> sides[] = {
      {&base.log_theta, &other.log_theta}, {&base.log_upsilon, &other.log_upsilon}};
  const char* names[] = {"log_theta", "log_upsilon"};
  for (int k = 0; k < 2; ++k) {
    const auto& [x, y] = sides[k];
    if (!agree_mod(x->a(), y->a(), prec)) {
      return CheckReport::failure("intrinsicness", config,
                                  mismatch_witness(std::string(names[k]) + ".a", x->a(), y->a(), prec));
    }
    if (!agree_mod(x->b(), y->b(), prec)) {
      return CheckReport::failure("intrinsicness", config,
                                  mismatch_witness(std::string(names[k]) + ".b", x->b(), y->b(), prec));
    }
  }
  return CheckReport::pass("intrinsicness", config);
}

PowerSeries pollack_product(long p, Parity parity, long cap, long prec) {
  if (p == 2 || !is_prime(p)) fail(ErrorCode::InvalidArgument, "parity products need an odd prime");
  if (cap < 1 || prec < 1) fail(ErrorCode::InvalidArgument, "cap and prec must be positive");
  const PadicScalar inv_p = PadicScalar::p_power(p, -1);
  const PowerSeries one = PowerSeries::constant(PadicScalar::from_integer(p, 1), cap);
  PowerSeries acc = one;
  constexpr long kMaxFactor = 512;
  for (long j = parity == Parity::Even ? 2 : 1; j <= kMaxFactor; j += 2) {
    const PowerSeries factor = scalar_mul(inv_p, phi(p, j, cap));
    // later factors sit even closer to 1, so the tail is 1 modulo p^closeness
    const long closeness = agreement_valuation(factor, one);
    const long deficit = std::min(0L, acc.min_valuation());
    if (closeness >= prec - deficit) return acc.with_absprec(prec);
    acc = mul(acc, factor, cap);
  }
  fail(ErrorCode::NotConverged, "parity product did not stabilize");
}

PollackNormalization pollack_comparison(long p, long cap, long prec, const LadderOptions& opts) {
  if (p == 2) fail(ErrorCode::InvalidArgument, "the parity-product comparison needs odd p");
  const nlohmann::json config = {{"p", p}, {"ap", 0}, {"cap", cap}, {"prec", prec}};
  long guard = 2;
  for (int attempt = 0; attempt < kGuardAttempts; ++attempt) {
    const long work = prec + guard;
    const HalfLogPair h = half_logs(p, 0, cap, work, opts);
    const PowerSeries even = pollack_product(p, Parity::Even, cap, work);
    const PowerSeries odd = pollack_product(p, Parity::Odd, cap, work);
    // log^theta = c * prod_even has no alpha part; log^upsilon = c' alpha prod_odd
    const PadicScalar c_theta = h.log_theta.a().coeff(0);
    const PadicScalar c_upsilon = h.log_upsilon.b().coeff(0);
    const PowerSeries rhs_theta = scalar_mul(c_theta, even);
    const PowerSeries rhs_upsilon = scalar_mul(c_upsilon, odd);
    const long got = std::min({rhs_theta.min_absprec(), rhs_upsilon.min_absprec(),
                               h.log_theta.min_absprec(), h.log_upsilon.min_absprec()});
    if (got < prec) {
      guard += prec - got;
      continue;
    }
    const PowerSeries zero(p, cap);
    nlohmann::json witness;
    if (!agree_mod(h.log_theta.a(), rhs_theta, prec)) {
      witness = mismatch_witness("log_theta.a", h.log_theta.a(), rhs_theta, prec);
    } else if (!agree_mod(h.log_theta.b(), zero, prec)) {
      witness = mismatch_witness("log_theta.b", h.log_theta.b(), zero, prec);
    } else if (!agree_mod(h.log_upsilon.a(), zero, prec)) {
      witness = mismatch_witness("log_upsilon.a", h.log_upsilon.a(), zero, prec);
    } else if (!agree_mod(h.log_upsilon.b(), rhs_upsilon, prec)) {
      witness = mismatch_witness("log_upsilon.b", h.log_upsilon.b(), rhs_upsilon, prec);
    }
    nlohmann::json cfg = config;
    cfg["c_theta"] = c_theta.to_string();
    cfg["c_upsilon"] = c_upsilon.to_string();
    CheckReport report = witness.is_null() ? CheckReport::pass("pollack_comparison", cfg)
                                           : CheckReport::failure("pollack_comparison", cfg, witness);
    return {c_theta, c_upsilon, std::move(report)};
  }
  fail(ErrorCode::NotConverged, "could not reach precision " + std::to_string(prec));
}

}  // namespace halflog
