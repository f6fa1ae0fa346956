#include "halflog/ladder.hpp"

#include <algorithm>
#include <cmath>

#include "halflog/trace_ladder.hpp"

namespace halflog {

namespace {

using ipoly::IntPoly;

struct IRow {
  IntPoly t;
  IntPoly u;
};

// Rows at `index` and `index - 1`.
struct IRows {
  IRow upper;
  IRow lower;
  long index;
};

// Applied after every product: remainder modulo a monic polynomial,
// truncation at X^cap, then coefficient reduction modulo coeff_mod.
struct Reducer {
  std::size_t cap = ipoly::kNoCap;
  mpz_class coeff_mod = 0;
  const IntPoly* modulus = nullptr;

  void operator()(IntPoly& f) const {
    if (modulus != nullptr) f = ipoly::rem(f, *modulus);
    ipoly::truncate(f, cap);
    if (coeff_mod != 0) ipoly::reduce_coeffs(f, coeff_mod);
  }

  // Phi_k(1+X), reduced.  Under a modulus this is built from repeated p-th
  // powers of 1+X so the full degree (p-1)p^(k-1) polynomial never exists.
  IntPoly phi(long p, long k) const {
    if (modulus == nullptr) {
      IntPoly f = ipoly::phi(p, k, cap);
      (*this)(f);
      return f;
    }
    auto mulmod = [&](const IntPoly& a, const IntPoly& b) {
      IntPoly r = ipoly::mul(a, b, cap);
      (*this)(r);
      return r;
    };
    auto powmod = [&](IntPoly base, long e) {
      IntPoly r{1};
      (*this)(r);
      for (; e > 0; e >>= 1) {
        if (e & 1) r = mulmod(r, base);
        if (e > 1) base = mulmod(base, base);
      }
      return r;
    };
    IntPoly step{1, 1};
    (*this)(step);
    for (long j = 1; j < k; ++j) step = powmod(step, p);
    IntPoly sum, term{1};
    (*this)(term);
    for (long t = 0; t < p; ++t) {
      sum = ipoly::lincomb(1, sum, 1, term);
      if (t + 1 < p) term = mulmod(term, step);
    }
    (*this)(sum);
    return sum;
  }
};

long shift_coeff(long p, long ap, long i, bool swap) { return ap_at(p, ap, swap ? i + 1 : i); }

IRow combine(const mpz_class& a, const IRow& x, const IRow& y, const Reducer& red) {
  // a*x - y
  IRow out{ipoly::lincomb(a, x.t, -1, y.t), ipoly::lincomb(a, x.u, -1, y.u)};
  if (red.coeff_mod != 0) {
    ipoly::reduce_coeffs(out.t, red.coeff_mod);
    ipoly::reduce_coeffs(out.u, red.coeff_mod);
  }
  return out;
}

// Level-1 rows at index 1: [[a_p, -Phi_1], [1, 0]].
IRows level_one(long p, long ap, const Reducer& red) {
  IntPoly phi1 = ipoly::scale(ipoly::phi(p, 1, red.cap), -1);
  IntPoly a{ap};
  ipoly::trim(a);
  red(phi1);
  red(a);
  IntPoly one{1};
  red(one);
  return {{a, phi1}, {one, {}}, 1};
}

// Multiplies on the left by [[a_p, -Phi_k], [1, 0]].
void raise_level(IRows& rows, long p, long ap, long k, const Reducer& red) {
  const IntPoly ph = red.phi(p, k);
  auto step = [&](const IntPoly& top, const IntPoly& bottom) {
    IntPoly prod = ipoly::mul(ph, bottom, red.cap);
    IntPoly out = ipoly::lincomb(ap, top, -1, prod);
    red(out);
    return out;
  };
  IRow next{step(rows.upper.t, rows.lower.t), step(rows.upper.u, rows.lower.u)};
  rows.lower = std::move(rows.upper);
  rows.upper = std::move(next);
}

void shift_to(IRows& rows, long target, long p, long ap, bool swap, const Reducer& red) {
  while (rows.index < target) {
    IRow next = combine(shift_coeff(p, ap, rows.index, swap), rows.upper, rows.lower, red);
    rows.lower = std::move(rows.upper);
    rows.upper = std::move(next);
    ++rows.index;
  }
  while (rows.index > target) {
    IRow prev = combine(shift_coeff(p, ap, rows.index - 1, swap), rows.lower, rows.upper, red);
    rows.upper = std::move(rows.lower);
    rows.lower = std::move(prev);
    --rows.index;
  }
}

IRows finite_rows(long p, long ap, long n, const Reducer& red) {
  if (n == 0) {
    // the empty product
    IntPoly one{1};
    red(one);
    return {{one, {}}, {{}, one}, 1};
  }
  IRows rows = level_one(p, ap, red);
  for (long k = 2; k <= n; ++k) raise_level(rows, p, ap, k, red);
  return rows;
}

LadderMatrix to_matrix(long p, long ap, long n, const IRows& rows, long cap) {
  auto conv = [&](const IntPoly& f) { return from_int_poly(p, f, cap); };
  return {p,
          ap,
          n,
          rows.index,
          cap,
          kInfinity,
          {conv(rows.upper.t), conv(rows.upper.u)},
          {conv(rows.lower.t), conv(rows.lower.u)}};
}

void check_level(long n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "level must be >= 0");
}

// p^exp * ints[k], ints known modulo p^M.
struct ScaledPoly {
  IntPoly ints;
  long exp;
};

long vp_mod(const mpz_class& x, long p, long cap_v) {
  if (x == 0) return cap_v;
  mpz_class t = x;
  return std::min(strip_p(t, p), cap_v);
}

long agreement(const ScaledPoly& x, const ScaledPoly& y, long p, const mpz_class& mod, long m_digits,
               std::size_t cap) {
  const long e = std::min(x.exp, y.exp);
  const mpz_class fx = pow_p(p, static_cast<unsigned long>(x.exp - e));
  const mpz_class fy = pow_p(p, static_cast<unsigned long>(y.exp - e));
  long v = m_digits;
  for (std::size_t k = 0; k < cap; ++k) {
    mpz_class d = (k < x.ints.size() ? x.ints[k] * fx : mpz_class(0)) -
                  (k < y.ints.size() ? y.ints[k] * fy : mpz_class(0));
    mpz_mod(d.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
    v = std::min(v, vp_mod(d, p, m_digits));
    if (v == 0) break;
  }
  return sat_add(e, v);
}

PowerSeries scaled_series(long p, const ScaledPoly& f, long cap, long prec) {
  std::vector<PadicScalar> c;
  c.reserve(static_cast<std::size_t>(cap));
  for (long k = 0; k < cap; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const mpz_class v = uk < f.ints.size() ? f.ints[uk] : mpz_class(0);
    c.push_back(PadicScalar::make(p, mpq_class(v), f.exp, prec));
  }
  return {p, std::move(c), cap};
}

}  // namespace

long level_shift(long p, long n) { return p == 2 ? n + 2 : n + 1; }

long default_max_level(long p, long cap, long prec) {
  long log_cap = 0;
  mpz_class pw = 1;
  while (pw < cap) {
    pw *= p;
    ++log_cap;
  }
  return log_cap + 2 * prec + 8;
}

LadderMatrix ladder(long p, long ap, long n, long i, long cap, const LadderOptions& opts) {
  require_supersingular(p, ap);
  check_level(n);
  Reducer red;
  if (cap != PowerSeries::kExactCap) red.cap = static_cast<std::size_t>(cap);
  IRows rows = finite_rows(p, ap, n, red);
  shift_to(rows, i, p, ap, opts.swap_parity, red);
  return to_matrix(p, ap, n, rows, cap);
}

LadderMatrix ladder_mod(long p, long ap, long n, long i, const PowerSeries& modulus,
                        const LadderOptions& opts) {
  require_supersingular(p, ap);
  check_level(n);
  const IntPoly mod = to_int_poly(modulus);
  if (mod.empty() || mod.back() != 1) fail(ErrorCode::InvalidArgument, "modulus must be monic");
  Reducer red;
  red.modulus = &mod;
  IRows rows = finite_rows(p, ap, n, red);
  shift_to(rows, i, p, ap, opts.swap_parity, red);
  return to_matrix(p, ap, n, rows, PowerSeries::kExactCap);
}

LadderMatrix ladder_infinity(long p, long ap, long i, long cap, long prec,
                             const LadderOptions& opts) {
  require_supersingular(p, ap);
  if (cap < 1 || prec < 1) fail(ErrorCode::InvalidArgument, "cap and prec must be positive");
  const long n_max = opts.max_level.value_or(default_max_level(p, cap, prec));
  long n0 = 1;
  for (mpz_class pw = p; pw < cap; pw *= p) ++n0;
  if (n0 > n_max) {
    fail(ErrorCode::NotConverged, "iteration cap n <= " + std::to_string(n_max) +
                                      " is below the starting level " + std::to_string(n0));
  }

  // Working modulus p^M leaves prec + 2 digits after the deepest scaling.
  const long depth = level_shift(p, n_max) + std::labs(i) + 2;
  const long m_digits = prec + 2 + (depth + 1) / 2;
  Reducer red;
  red.cap = static_cast<std::size_t>(cap);
  red.coeff_mod = pow_p(p, static_cast<unsigned long>(m_digits));

  IRows base = level_one(p, ap, red);
  for (long k = 2; k <= n0; ++k) raise_level(base, p, ap, k, red);

  struct Approx {
    ScaledPoly e[4];
  };
  std::optional<Approx> prev;
  int good_runs = 0;
  for (long n = n0;; ++n) {
    if (n > n0) raise_level(base, p, ap, n, red);
    const long big_n = level_shift(p, n);
    IRows rows = base;
    shift_to(rows, i - big_n, p, ap, opts.swap_parity, red);
    const long su = floor_div(i - big_n, 2);
    const long sl = floor_div(i - big_n - 1, 2);
    Approx cur{{{rows.upper.t, su}, {rows.upper.u, su}, {rows.lower.t, sl}, {rows.lower.u, sl}}};
    if (prev) {
      long v = kInfinity;
      for (int k = 0; k < 4 && v >= prec; ++k) {
        v = std::min(v, agreement(cur.e[k], prev->e[k], p, red.coeff_mod, m_digits, red.cap));
      }
      good_runs = v >= prec ? good_runs + 1 : 0;
      if (good_runs >= 2) {
        LadderMatrix out{p,
                         ap,
                         std::nullopt,
                         i,
                         cap,
                         prec,
                         {scaled_series(p, cur.e[0], cap, prec), scaled_series(p, cur.e[1], cap, prec)},
                         {scaled_series(p, cur.e[2], cap, prec), scaled_series(p, cur.e[3], cap, prec)},
                         n};
        return out;
      }
    }
    prev = std::move(cur);
    if (n >= n_max) break;
  }
  fail(ErrorCode::NotConverged, "limit at index " + std::to_string(i) + " not stable modulo " +
                                    std::to_string(p) + "^" + std::to_string(prec) +
                                    " by level " + std::to_string(n_max));
}

PowerSeries ladder_det(const LadderMatrix& m) {
  return mul(m.upper.theta, m.lower.upsilon, m.cap) - mul(m.upper.upsilon, m.lower.theta, m.cap);
}

CheckReport kappa_identity_check(long p, long ap, long n, long i) {
  const nlohmann::json config = {{"p", p}, {"ap", ap}, {"n", n}, {"i", i}};
  const long big_n = level_shift(p, n);
  const LadderMatrix at0 = ladder(p, ap, n, 0);
  const LadderMatrix shifted = ladder(p, ap, n, -big_n - i);
  const QuadExtScalar alpha = QuadExtScalar::alpha(p, ap);
  const QuadExtScalar beta_prev = beta(p, ap, i - 1);
  auto kappa = [&](long m) { return alpha.pow(m) * (beta(p, ap, m) - beta_prev); };
  const QuadExtScalar k0 = kappa(-big_n);
  const QuadExtScalar k1 = kappa(-big_n - 1);
  const QuadExtScalar rhs_scale =
      PadicScalar::p_power(p, floor_div(-big_n - i, 2)) * QuadExtScalar::alpha_bar(p, ap).pow(i);

  auto side = [&](const PowerSeries& row0, const PowerSeries& row_m1, const PowerSeries& target) {
    const QuadSeries lhs = scalar_mul(k0, QuadSeries::from_series(ap, row0)) -
                           scalar_mul(k1, QuadSeries::from_series(ap, row_m1));
    const QuadSeries rhs = scalar_mul(rhs_scale, QuadSeries::from_series(ap, target));
    return std::pair{lhs, rhs};
  };
  const auto [lt, rt] = side(at0.upper.theta, at0.lower.theta, shifted.upper.theta);
  const auto [lu, ru] = side(at0.upper.upsilon, at0.lower.upsilon, shifted.upper.upsilon);
  if (lt == rt && lu == ru) return CheckReport::pass("kappa_identity", config);
  const bool theta_ok = lt == rt;
  const QuadSeries& l = theta_ok ? lu : lt;
  const QuadSeries& r = theta_ok ? ru : rt;
  return CheckReport::failure("kappa_identity", config,
                              {{"entry", theta_ok ? "upsilon" : "theta"},
                               {"lhs_a", l.a().to_string()},
                               {"rhs_a", r.a().to_string()}});
}

}  // namespace halflog
