#include "halflog/decomposer.hpp"

#include "halflog/ladder.hpp"
#include "halflog/trace_ladder.hpp"

namespace halflog {

namespace {

void check_compatible(const LambdaElement& x, const LambdaElement& y) {
  if (x.prime() != y.prime() || x.level() != y.level()) {
    fail(ErrorCode::InvalidArgument, "Lambda elements at different (p, n)");
  }
}

LambdaElement from_poly(long p, long n, const PowerSeries& f) { return {p, n, f}; }

}  // namespace

LambdaElement::LambdaElement(long p, long level, const PowerSeries& f)
    : level_(level), poly_(PowerSeries(p)) {
  if (level < 0) fail(ErrorCode::InvalidArgument, "negative level");
  if (f.prime() != p) fail(ErrorCode::MixedPrime, "polynomial over a different prime");
  poly_ = reduce_mod(f.as_polynomial(), omega(p, level));
}

LambdaElement LambdaElement::zero(long p, long level) { return {p, level, PowerSeries(p)}; }

LambdaElement operator+(const LambdaElement& x, const LambdaElement& y) {
  check_compatible(x, y);
  return from_poly(x.prime(), x.level_, x.poly_ + y.poly_);
}

LambdaElement operator-(const LambdaElement& x, const LambdaElement& y) {
  check_compatible(x, y);
  return from_poly(x.prime(), x.level_, x.poly_ - y.poly_);
}

LambdaElement operator*(const LambdaElement& x, const LambdaElement& y) {
  check_compatible(x, y);
  return from_poly(x.prime(), x.level_, mul(x.poly_, y.poly_));
}

LambdaElement operator*(long c, const LambdaElement& x) {
  return from_poly(x.prime(), x.level_, scalar_mul(c, x.poly_));
}

bool operator==(const LambdaElement& x, const LambdaElement& y) {
  return x.level_ == y.level_ && x.poly_ == y.poly_;
}

LambdaPair operator-(const LambdaPair& x, const LambdaPair& y) {
  return {x.first - y.first, x.second - y.second};
}

LambdaPair phi_apply(long p, long ap, long n, long i, const LambdaPair& v) {
  const LadderMatrix m = ladder(p, ap, n, i);
  auto lam = [&](const PowerSeries& f) { return LambdaElement(p, n, f); };
  return {lam(m.upper.theta) * v.first + lam(m.upper.upsilon) * v.second,
          lam(m.lower.theta) * v.first + lam(m.lower.upsilon) * v.second};
}

KernelBasis kernel_basis(long p, long ap, long n, long i) {
  const LadderMatrix m = ladder(p, ap, n, i);
  const PowerSeries x = PowerSeries::monomial(p, 1);
  auto gen = [&](const LadderRow& row) {
    return LambdaPair{LambdaElement(p, n, mul(x, row.upsilon)), LambdaElement(p, n, -mul(x, row.theta))};
  };
  return {{gen(m.upper), gen(m.lower)}};
}

bool kernel_member(long p, long ap, long n, const LambdaPair& v) {
  return phi_apply(p, ap, n, 1, v).is_zero();
}

LambdaPair decompose(long p, long ap, long n, const LambdaElement& p1, const LambdaElement& p0) {
  require_supersingular(p, ap);
  if (p1.level() != n || p0.level() != n) fail(ErrorCode::InvalidArgument, "inputs not at level n");
  LambdaElement upper = p1;
  LambdaElement lower = p0;
  for (long j = n; j >= 1; --j) {
    // (upper, lower) = [[a_p, -Phi_j], [1, 0]] (w1, w0)
    const LambdaElement numer = ap * lower - upper;
    PowerSeries w0(p);
    try {
      w0 = exact_divide(numer.poly(), phi(p, j));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InexactDivision) throw;
      fail(ErrorCode::InexactDivision,
           "input is not in the image of phi_" + std::to_string(n) + ": Phi_" + std::to_string(j) +
               " does not divide a_p*P0 - P1 at that stage");
    }
    upper = lower;
    lower = LambdaElement(p, n, w0);
  }
  LambdaPair out{upper, lower};
  if (!(phi_apply(p, ap, n, 1, out) == LambdaPair{p1, p0})) {
    fail(ErrorCode::IdentityViolation, "peeled pair does not map back onto the input");
  }
  return out;
}

std::string kernel_coset_note(long p, long ap, long n) {
  return "unique modulo ker phi_" + std::to_string(n) + " = Lambda_n X(Upsilon^1, -Theta^1) + " +
         "Lambda_n X(Upsilon^0, -Theta^0) at (p, a_p) = (" + std::to_string(p) + ", " +
         std::to_string(ap) + "); the canonical peeling representative is returned";
}

CheckReport limit_lemma_check(long p, long ap, long m, long nu) {
  const nlohmann::json config = {{"p", p}, {"ap", ap}, {"m", m}, {"nu", nu}};
  if (m < 1 || nu < 0) fail(ErrorCode::InvalidArgument, "need m >= 1 and nu >= 0");
  const long n = 2 * m + nu;
  const long i = 2 * m + 1;
  const PowerSeries w = omega(p, nu);
  const LadderMatrix lm = ladder_mod(p, ap, n, i, w);
  const PowerSeries x = PowerSeries::monomial(p, 1);
  const std::pair<std::string, const PowerSeries*> entries[] = {
      {"X*Upsilon^i", &lm.upper.upsilon}, {"-X*Theta^i", &lm.upper.theta},
      {"X*Upsilon^(i-1)", &lm.lower.upsilon}, {"-X*Theta^(i-1)", &lm.lower.theta}};
  for (const auto& [name, f] : entries) {
    const PowerSeries g = reduce_mod(mul(x, *f), w);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const PadicScalar& c = g.coeffs()[k];
      if (c.valuation() < m) {
        return CheckReport::failure("limit_lemma", config,
                                    {{"entry", name}, {"coefficient", k}, {"value", c.to_string()}});
      }
    }
  }
  return CheckReport::pass("limit_lemma", config);
}

}  // namespace halflog
