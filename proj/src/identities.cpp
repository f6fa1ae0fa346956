#include "halflog/identities.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "halflog/decomposer.hpp"
#include "halflog/half_log.hpp"
#include "halflog/trace_ladder.hpp"

namespace halflog {

namespace {

using json = nlohmann::json;

json pair_config(long p, long ap) { return {{"p", p}, {"ap", ap}}; }

// First coefficient where f and g disagree modulo p^prec, as a witness.
json series_witness(const std::string& what, const PowerSeries& f, const PowerSeries& g, long prec) {
  const std::size_t len = std::max(f.size(), g.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (!agree_mod(f.coeff(k), g.coeff(k), prec)) {
      return {{"entry", what}, {"coefficient", k}, {"lhs", f.coeff(k).to_string()},
              {"rhs", g.coeff(k).to_string()}};
    }
  }
  return {{"entry", what}};
}

// Exact comparison of two series; the witness names the first differing term.
std::optional<json> exact_mismatch(const std::string& what, const PowerSeries& f,
                                   const PowerSeries& g) {
  if (f == g) return std::nullopt;
  return series_witness(what, f, g, kInfinity);
}

constexpr long kGuardAttempts = 6;

// p^(N-n): the limit normalization collects one factor p per level shift step.
long shift_excess(long p) { return p == 2 ? 2 : 1; }

const std::vector<std::string> kCheckNames = {
    "coefficient_factorization", "coefficient_lemma",  "delta_table",
    "factorization",             "finite_determinant", "half_log_growth",
    "infinity_determinant",      "infinity_row_recursion", "intrinsicness",
    "kappa_identity",            "kernel",             "limit_lemma",
    "matrix_identities",         "pollack_comparison", "y_beta_identity"};

}  // namespace

SuiteConfig default_suite_config() {
  SuiteConfig c;
  c.pairs = {{2, 2}, {2, -2}, {3, 3}, {3, -3}, {3, 0}, {5, 0}};
  return c;
}

std::vector<std::string> suite_check_names() { return kCheckNames; }

const std::vector<PrintedColumn>& printed_delta_table() {
  static const std::vector<PrintedColumn> table = {
      {2, 2,
       {"-c_n + c_{n-1}", "c_{n-1}", "c_n", "2c_n - c_{n-1}", "c_n - c_{n-1}", "-c_{n-1}", "-c_n",
        "-2c_n + c_{n-1}", "-c_n + c_{n-1}", "c_{n-1}"}},
      {2, -2,
       {"-c_n - c_{n-1}", "c_{n-1}", "c_n", "-2c_n - c_{n-1}", "c_n + c_{n-1}", "-c_{n-1}", "-c_n",
        "2c_n + c_{n-1}", "-c_n - c_{n-1}", "c_{n-1}"}},
      {3, 3,
       {"-c_n + c_{n-1}", "c_{n-1}", "c_n", "3c_n - c_{n-1}", "2c_n - c_{n-1}", "3c_n - 2c_{n-1}",
        "c_n - c_{n-1}", "-c_{n-1}", "-c_n", "-3c_n + c_{n-1}"}},
      {3, -3,
       {"-c_n - c_{n-1}", "c_{n-1}", "c_n", "-3c_n - c_{n-1}", "2c_n + c_{n-1}",
        "-3c_n - 2c_{n-1}", "c_n + c_{n-1}", "-c_{n-1}", "-c_n", "3c_n + c_{n-1}"}},
      {0, 0,
       {"-c_n", "c_{n-1}", "c_n", "-c_{n-1}", "-c_n", "c_{n-1}", "c_n", "-c_{n-1}", "-c_n",
        "c_{n-1}"}},
  };
  return table;
}

CheckReport delta_table_check(long p, long ap) {
  const json config = pair_config(p, ap);
  const PrintedColumn* column = nullptr;
  for (const auto& c : printed_delta_table()) {
    // the a_p = 0 column is printed once for every odd p
    if (c.ap == ap && (c.p == p || (ap == 0 && p != 2))) column = &c;
  }
  if (column == nullptr) fail(ErrorCode::InvalidArgument, "no printed column for this pair");
  const auto rows = delta_table(p, ap, -2, 7);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].rendered != column->rows[k]) {
      return CheckReport::failure("delta_table", config,
                                  {{"i", rows[k].i},
                                   {"computed", rows[k].rendered},
                                   {"printed", column->rows[k]}});
    }
  }
  return CheckReport::pass("delta_table", config);
}

CheckReport coefficient_lemma_check(long p, long ap) {
  const json config = pair_config(p, ap);
  const PeriodConstants pc = period_constants(p, ap);
  const Mat2 c = hecke_matrix(p, ap);
  const long span = 2 * pc.four_tilde + 2;
  for (long i = -span; i <= span; ++i) {
    const DeltaCoeffs d = delta_coeffs(p, ap, i);
    // direct form: p^-[i/2] times the top row of C^i
    const Mat2 ci = c.pow(i);
    const mpq_class scale = floor_div(i, 2) >= 0
                                ? mpq_class(1, 1) / mpq_class(pow_p(p, floor_div(i, 2)))
                                : mpq_class(pow_p(p, -floor_div(i, 2)));
    const mpq_class y = ci.a * scale;
    const mpq_class yp = ci.b * scale;
    if (y != mpq_class(d.y) || yp != mpq_class(d.y_prime)) {
      return CheckReport::failure("coefficient_lemma", config,
                                  {{"i", i},
                                   {"direct", {y.get_str(), yp.get_str()}},
                                   {"reduced", {d.y.get_str(), d.y_prime.get_str()}}});
    }
    const DeltaCoeffs up = delta_coeffs(p, ap, i + 1);
    const DeltaCoeffs down = delta_coeffs(p, ap, i - 1);
    const long a = ap_at(p, ap, i);
    if (up.y != a * d.y - down.y || up.y_prime != a * d.y_prime - down.y_prime) {
      return CheckReport::failure("coefficient_lemma", config,
                                  {{"i", i}, {"relation", "y_(i+1) = a_p(i) y_i - y_(i-1)"}});
    }
    const DeltaCoeffs shifted = delta_coeffs(p, ap, i + pc.two_tilde);
    if (shifted.y != -d.y || shifted.y_prime != -d.y_prime) {
      return CheckReport::failure("coefficient_lemma", config,
                                  {{"i", i}, {"relation", "y_(i+2~) = -y_i"}});
    }
  }
  return CheckReport::pass("coefficient_lemma", config);
}

CheckReport matrix_identity_check(long p, long ap) {
  const json config = pair_config(p, ap);
  try {
    const PeriodConstants pc = period_constants(p, ap);
    for (long l = 1; l <= 2 * pc.four_tilde; ++l) a_matrix(p, ap, l);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IdentityViolation) throw;
    return CheckReport::failure("matrix_identities", config, {{"error", e.what()}});
  }
  return CheckReport::pass("matrix_identities", config);
}

CheckReport y_beta_suite_check(long p, long ap) {
  const json config = pair_config(p, ap);
  const PeriodConstants pc = period_constants(p, ap);
  for (long i = -pc.two_tilde; i <= pc.two_tilde + 1; ++i) {
    for (long k = 1; k <= pc.two_tilde + 1; ++k) {
      CheckReport r = y_beta_identity_check(p, ap, i, k);
      if (!r.passed) {
        r.name = "y_beta_identity";
        return r;
      }
    }
  }
  return CheckReport::pass("y_beta_identity", config);
}

CheckReport finite_determinant_check(long p, long ap, long n, long i, const LadderOptions& opts) {
  const json config = {{"p", p}, {"ap", ap}, {"n", n}, {"i", i}};
  const LadderMatrix m = ladder(p, ap, n, i, PowerSeries::kExactCap, opts);
  const PowerSeries lhs = mul(PowerSeries::monomial(p, 1), ladder_det(m));
  if (auto w = exact_mismatch("X*det", lhs, omega(p, n))) {
    return CheckReport::failure("finite_determinant", config, *w);
  }
  return CheckReport::pass("finite_determinant", config);
}

CheckReport coefficient_factorization_check(long p, long ap, long n, long j,
                                            const LadderOptions& opts) {
  const json config = {{"p", p}, {"ap", ap}, {"n", n}, {"j", j}};
  const LadderMatrix base = ladder(p, ap, n, 0, PowerSeries::kExactCap, opts);
  const LadderMatrix at_j = ladder(p, ap, n, j, PowerSeries::kExactCap, opts);
  // (Theta^j, Upsilon^j) = y_j (Theta^0, Upsilon^0) + y'_j (Theta^(-1), Upsilon^(-1))
  const std::pair<long, const LadderRow*> rows[] = {{j, &at_j.upper}, {j - 1, &at_j.lower}};
  for (const auto& [k, row] : rows) {
    const DeltaCoeffs d = delta_coeffs(p, ap, k);
    const PadicScalar y = PadicScalar::from_integer(p, d.y);
    const PadicScalar yp = PadicScalar::from_integer(p, d.y_prime);
    const PowerSeries theta = scalar_mul(y, base.upper.theta) + scalar_mul(yp, base.lower.theta);
    const PowerSeries upsilon =
        scalar_mul(y, base.upper.upsilon) + scalar_mul(yp, base.lower.upsilon);
    if (auto w = exact_mismatch("Theta^" + std::to_string(k), row->theta, theta)) {
      return CheckReport::failure("coefficient_factorization", config, *w);
    }
    if (auto w = exact_mismatch("Upsilon^" + std::to_string(k), row->upsilon, upsilon)) {
      return CheckReport::failure("coefficient_factorization", config, *w);
    }
  }
  return CheckReport::pass("coefficient_factorization", config);
}

CheckReport kernel_check(long p, long ap, long n, long samples, std::uint64_t seed) {
  const json config = {{"p", p}, {"ap", ap}, {"n", n}, {"samples", samples}, {"seed", seed}};
  for (long i : {1L, 2L}) {
    const KernelBasis basis = kernel_basis(p, ap, n, i);
    for (std::size_t g = 0; g < basis.generators.size(); ++g) {
      if (!kernel_member(p, ap, n, basis.generators[g])) {
        return CheckReport::failure("kernel", config, {{"generator", g}, {"i", i}});
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-p * p, p * p);
  const long degree = omega(p, n).degree();
  auto random_element = [&] {
    std::vector<mpz_class> c(static_cast<std::size_t>(degree));
    for (auto& x : c) x = coeff(rng);
    return LambdaElement(p, n, PowerSeries::from_integers(p, c));
  };
  for (long s = 0; s < samples; ++s) {
    const LambdaPair v{random_element(), random_element()};
    const LambdaPair image = phi_apply(p, ap, n, 1, v);
    const LambdaPair u = decompose(p, ap, n, image.first, image.second);
    if (!kernel_member(p, ap, n, u - v)) {
      return CheckReport::failure("kernel", config,
                                  {{"sample", s}, {"theta", v.first.poly().to_string()},
                                   {"upsilon", v.second.poly().to_string()}});
    }
  }
  return CheckReport::pass("kernel", config);
}

CheckReport infinity_determinant_check(long p, long ap, long cap, long prec, DeterminantForm form,
                                       const LadderOptions& opts) {
  json config = {{"p", p}, {"ap", ap}, {"cap", cap}, {"prec", prec},
                 {"form", form == DeterminantForm::Literal ? "literal" : "normalized"}};
  const PowerSeries log = log_series(p, cap);
  long guard = 2;
  for (long attempt = 0; attempt < kGuardAttempts; ++attempt) {
    const LadderMatrix m = ladder_infinity(p, ap, 1, cap, prec + guard, opts);
    PowerSeries lhs = ladder_det(m);
    if (form == DeterminantForm::Normalized) {
      lhs = scalar_mul(PadicScalar::p_power(p, shift_excess(p)),
                       mul(PowerSeries::monomial(p, 1), lhs, cap));
    }
    const long got = lhs.min_absprec();
    if (got < prec) {
      guard += prec - got;
      continue;
    }
    config["stop_level"] = m.stop_level;
    if (!agree_mod(lhs, log, prec)) {
      return CheckReport::failure("infinity_determinant", config,
                                  series_witness("determinant", lhs, log, prec));
    }
    return CheckReport::pass("infinity_determinant", config);
  }
  fail(ErrorCode::NotConverged, "determinant precision did not reach " + std::to_string(prec));
}

CheckReport infinity_row_recursion_check(long p, long ap, long i, long cap, long prec,
                                         const LadderOptions& opts) {
  const json config = {{"p", p}, {"ap", ap}, {"i", i}, {"cap", cap}, {"prec", prec}};
  const LadderMatrix m = ladder_infinity(p, ap, i, cap, prec, opts);
  const LadderMatrix next = ladder_infinity(p, ap, i + 1, cap, prec, opts);
  // at infinity the shift is [[a_p, -p], [1, 0]] for every index
  auto step = [&](const PowerSeries& hi, const PowerSeries& lo) {
    return scalar_mul(ap, hi) - scalar_mul(p, lo);
  };
  const std::tuple<std::string, PowerSeries, PowerSeries> pairs[] = {
      {"Theta^(i+1)", next.upper.theta, step(m.upper.theta, m.lower.theta)},
      {"Upsilon^(i+1)", next.upper.upsilon, step(m.upper.upsilon, m.lower.upsilon)},
      {"Theta^i", next.lower.theta, m.upper.theta},
      {"Upsilon^i", next.lower.upsilon, m.upper.upsilon}};
  for (const auto& [what, lhs, rhs] : pairs) {
    if (!agree_mod(lhs, rhs, prec)) {
      return CheckReport::failure("infinity_row_recursion", config,
                                  series_witness(what, lhs, rhs, prec));
    }
  }
  return CheckReport::pass("infinity_row_recursion", config);
}

CheckReport half_log_growth_check(long p, long ap, long cap, long prec, const LadderOptions& opts) {
  // log^theta and log^upsilon grow like a square root of log_p(1+X); on the
  // truncation the excess over half the logarithm's growth stays bounded.
  constexpr long kBound = 2;
  json config = {{"p", p}, {"ap", ap}, {"cap", cap}, {"prec", prec}, {"bound", kBound}};
  const HalfLogPair h = half_logs(p, ap, cap, prec, opts);
  const PowerSeries log = log_series(p, cap);
  json excess = json::array();
  bool ok = true;
  for (const mpq_class& s : {mpq_class(1, 2), mpq_class(1, 4)}) {
    const auto ref = gauss_norm_log(log, s);
    for (const auto& [name, f] :
         {std::pair<const char*, const QuadSeries*>{"log_theta", &h.log_theta},
          std::pair<const char*, const QuadSeries*>{"log_upsilon", &h.log_upsilon}}) {
      const auto g = gauss_norm_log(*f, s);
      if (!g || !ref) fail(ErrorCode::PrecisionExhausted, "zero series in growth check");
      const mpq_class d = *g - *ref / 2;
      excess.push_back({{"series", name}, {"s", s.get_str()}, {"excess", d.get_str()}});
      if (abs(d) > kBound) ok = false;
    }
  }
  config["excess"] = excess;
  if (!ok) return CheckReport::failure("half_log_growth", config, {{"excess", excess}});
  return CheckReport::pass("half_log_growth", config);
}

CheckReport factorization_check(long p, long ap, const PowerSeries& l_theta,
                                 const PowerSeries& l_upsilon, long cap, long prec, long j_max,
                                 const LadderOptions& opts) {
  json config = {{"p", p},       {"ap", ap},       {"cap", cap},
                 {"prec", prec}, {"j_max", j_max}, {"l_theta", l_theta.to_string()},
                 {"l_upsilon", l_upsilon.to_string()}};
  if (j_max < 1) fail(ErrorCode::InvalidArgument, "j_max must be positive");
  const QuadExtScalar abar = QuadExtScalar::alpha_bar(p, ap);
  const PowerSeries lt = l_theta.as_polynomial();
  const PowerSeries lu = l_upsilon.as_polynomial();
  auto lift = [&](const PowerSeries& f) { return QuadSeries::from_series(ap, f); };

  // Finite side: E_n at zeta_(p^j) - 1 for n = j and n = j + 1.
  auto finite_value = [&](long n, long j) {
    const long big_n = level_shift(p, n);
    const LadderMatrix m = ladder(p, ap, n, -big_n, PowerSeries::kExactCap, opts);
    const PowerSeries top = mul(m.upper.theta, lt) + mul(m.upper.upsilon, lu);
    const PowerSeries bottom = mul(m.lower.theta, lt) + mul(m.lower.upsilon, lu);
    const QuadSeries e =
        lift(scalar_mul(PadicScalar::p_power(p, floor_div(-big_n, 2)), top)) -
        scalar_mul(abar, lift(scalar_mul(PadicScalar::p_power(p, floor_div(-big_n - 1, 2)), bottom)));
    return eval_at_root(e, j);
  };

  // The half-logs are truncated; X^k at zeta_(p^j) - 1 has valuation k/d_j
  // and the coefficients lose about half a digit per power of p, so the
  // truncation error drops below p^-prec once cap_eval/d_j clears
  // prec plus that loss.
  const long d = (p - 1) * static_cast<long>(pow_p(p, static_cast<unsigned long>(j_max - 1)).get_si());
  long digits = 1;
  for (long t = d * (prec + 4); t >= p; t /= p) ++digits;
  const long cap_eval = std::max(cap, d * (prec + 4 + digits));
  config["cap_eval"] = cap_eval;

  long guard = 2;
  for (long attempt = 0; attempt < kGuardAttempts; ++attempt) {
    const HalfLogPair h = half_logs(p, ap, cap_eval, prec + guard, opts);
    const QuadSeries s = mul(h.log_theta, lt, cap_eval) + mul(h.log_upsilon, lu, cap_eval);
    bool short_precision = false;
    for (long j = 1; j <= j_max; ++j) {
      const QuadSeries rhs = eval_at_root(s, j);
      if (rhs.min_absprec() < prec) {
        guard += prec - rhs.min_absprec();
        short_precision = true;
        break;
      }
      const QuadSeries at_j = finite_value(j, j);
      const QuadSeries at_next = finite_value(j + 1, j);
      if (!(at_j == at_next)) {
        return CheckReport::failure("factorization", config,
                                    {{"j", j}, {"relation", "E_j and E_(j+1) differ at the root"}});
      }
      if (!agree_mod(at_j, rhs, prec)) {
        return CheckReport::failure(
            "factorization", config,
            {{"j", j},
             {"finite", json::array({at_j.a().to_string(), at_j.b().to_string()})},
             {"limit", json::array({rhs.a().to_string(), rhs.b().to_string()})}});
      }
    }
    if (!short_precision) return CheckReport::pass("factorization", config);
  }
  fail(ErrorCode::NotConverged, "factorization precision did not reach " + std::to_string(prec));
}

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
  auto selected = [&](const std::string& name) {
    return config.only.empty() ||
           std::find(config.only.begin(), config.only.end(), name) != config.only.end();
  };
  for (const auto& name : config.only) {
    if (std::find(kCheckNames.begin(), kCheckNames.end(), name) == kCheckNames.end()) {
      fail(ErrorCode::InvalidArgument, "unknown check '" + name + "'");
    }
  }
  if (config.cap < 1 || config.prec < 1 || config.max_level < 1) {
    fail(ErrorCode::InvalidArgument, "cap, prec and max_level must be positive");
  }

  struct Task {
    std::string name;
    json config;
    std::function<CheckReport()> run;
  };
  std::vector<Task> tasks;
  auto add = [&](const std::string& name, json cfg, std::function<CheckReport()> fn) {
    if (selected(name)) tasks.push_back({name, std::move(cfg), std::move(fn)});
  };

  const LadderOptions& opts = config.ladder;
  const long cap = config.cap;
  const long prec = config.prec;
  for (const auto& [p, ap] : config.pairs) {
    require_supersingular(p, ap);
    const PeriodConstants pc = period_constants(p, ap);
    const json base = pair_config(p, ap);

    const bool printed = ap == 0 ? p != 2 : (p == 2 || p == 3) && std::abs(ap) == p;
    if (printed) add("delta_table", base, [=] { return delta_table_check(p, ap); });
    add("coefficient_lemma", base, [=] { return coefficient_lemma_check(p, ap); });
    add("matrix_identities", base, [=] { return matrix_identity_check(p, ap); });
    add("y_beta_identity", base, [=] { return y_beta_suite_check(p, ap); });

    for (long n = 1; n <= config.max_level; ++n) {
      for (long i = -2; i <= pc.two_tilde + 1; ++i) {
        add("finite_determinant", {{"p", p}, {"ap", ap}, {"n", n}, {"i", i}},
            [=] { return finite_determinant_check(p, ap, n, i, opts); });
        add("kappa_identity", {{"p", p}, {"ap", ap}, {"n", n}, {"i", i}},
            [=] { return kappa_identity_check(p, ap, n, i); });
      }
      for (long j = -pc.two_tilde; j <= pc.two_tilde + 1; ++j) {
        add("coefficient_factorization", {{"p", p}, {"ap", ap}, {"n", n}, {"j", j}},
            [=] { return coefficient_factorization_check(p, ap, n, j, opts); });
      }
    }
    const long kernel_level = std::min(config.max_level, 2L);
    for (long n = 1; n <= kernel_level; ++n) {
      add("kernel", {{"p", p}, {"ap", ap}, {"n", n}},
          [=, samples = config.kernel_samples, seed = config.seed] {
            return kernel_check(p, ap, n, samples, seed + static_cast<std::uint64_t>(n));
          });
    }
    for (long m = 1; m <= 2; ++m) {
      for (long nu = 0; nu <= 2; ++nu) {
        add("limit_lemma", {{"p", p}, {"ap", ap}, {"m", m}, {"nu", nu}},
            [=] { return limit_lemma_check(p, ap, m, nu); });
      }
    }
    if (!config.include_limits) continue;

    const json limit = {{"p", p}, {"ap", ap}, {"cap", cap}, {"prec", prec}};
    add("infinity_determinant", limit, [=] {
      return infinity_determinant_check(p, ap, cap, prec, DeterminantForm::Normalized, opts);
    });
    for (long i : {0L, 1L}) {
      json cfg = limit;
      cfg["i"] = i;
      add("infinity_row_recursion", cfg,
          [=] { return infinity_row_recursion_check(p, ap, i, cap, prec, opts); });
    }
    for (const auto& [i, j] : {std::pair{1L, 2L}, std::pair{2L, pc.two_tilde + 1}}) {
      if ((i - j) % pc.two_tilde == 0) continue;
      json cfg = limit;
      cfg["i"] = i;
      cfg["j"] = j;
      add("intrinsicness", cfg, [=] { return intrinsicness_check(p, ap, i, j, cap, prec, opts); });
    }
    if (ap == 0 && p != 2) {
      add("pollack_comparison", limit, [=] { return pollack_comparison(p, cap, prec, opts).report; });
    }
    add("half_log_growth", limit, [=] { return half_log_growth_check(p, ap, cap, prec, opts); });

    const long j_max = p <= 3 ? 2 : 1;
    const PowerSeries one = PowerSeries::from_integers(p, {1});
    const PowerSeries zero(p);
    const PowerSeries mixed = PowerSeries::from_integers(p, {2, -1, 3});
    const std::pair<PowerSeries, PowerSeries> inputs[] = {{one, zero}, {zero, one}, {mixed, one}};
    for (std::size_t k = 0; k < std::size(inputs); ++k) {
      json cfg = limit;
      cfg["input"] = k;
      add("factorization", cfg, [=, in = inputs[k]] {
        return factorization_check(p, ap, in.first, in.second, cap, prec, j_max, opts);
      });
    }
  }

  std::vector<CheckReport> reports(tasks.size());
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long t = 0; t < count; ++t) {
    const Task& task = tasks[static_cast<std::size_t>(t)];
    try {
      reports[static_cast<std::size_t>(t)] = task.run();
    } catch (const std::exception& e) {
      reports[static_cast<std::size_t>(t)] =
          CheckReport::failure(task.name, task.config, {{"error", e.what()}});
    }
  }
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.config.dump() < b.config.dump();
  });
  return reports;
}

}  // namespace halflog
